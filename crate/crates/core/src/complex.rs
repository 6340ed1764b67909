//! Polyhedral complexes, fans, and the cone construction.
//!
//! Cells are kept in a canonical order (dimension-major, then the canonical
//! polyhedron order), the face lattice is recomputed from the geometry and
//! never trusted from input, and the pairwise intersection condition is
//! checked exactly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyhedron::Polyhedron;
use crate::rat::{lcm_denominators, rat_is_integer, Rat};

pub type CellId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralComplex {
    ambient: usize,
    cells: Vec<Polyhedron>,
    dims: Vec<usize>,
    /// facet (codimension-one face) cells of each cell
    facets_of: Vec<Vec<CellId>>,
    /// cells having the key cell as a facet
    cofacets_of: Vec<Vec<CellId>>,
}

fn sort_canonical(cells: Vec<Polyhedron>) -> Vec<(Polyhedron, usize)> {
    let mut with_dims: Vec<(Polyhedron, usize)> = cells.into_iter().map(|c| {
        let d = c.dim();
        (c, d)
    }).collect();
    with_dims.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    with_dims.dedup_by(|a, b| a.0 == b.0);
    with_dims
}

impl PolyhedralComplex {
    /// Validates the given cells as a polyhedral complex: closure under
    /// faces, and pairwise intersections being common faces. Cells are
    /// re-sorted into canonical order; the returned map sends input
    /// positions to canonical ids.
    pub fn validate(ambient: usize, cells: Vec<Polyhedron>) -> Result<(Self, Vec<CellId>)> {
        Self::build(ambient, cells, false)
    }

    /// Like `validate`, but first closes the cell set under faces.
    pub fn synthesize(ambient: usize, cells: Vec<Polyhedron>) -> Result<(Self, Vec<CellId>)> {
        Self::build(ambient, cells, true)
    }

    fn build(ambient: usize, input: Vec<Polyhedron>, close: bool) -> Result<(Self, Vec<CellId>)> {
        if ambient == 0 {
            return Err(Error::InvalidInput("ambient dimension must be >= 1".into()));
        }
        if input.is_empty() {
            return Err(Error::InvalidInput("complex has no cells".into()));
        }
        for c in &input {
            if c.ambient_dim() != ambient {
                return Err(Error::InvalidInput(format!(
                    "cell {c} has ambient dimension {} instead of {ambient}",
                    c.ambient_dim()
                )));
            }
        }
        let mut cells: Vec<Polyhedron> = input.clone();
        if close {
            let mut seen: std::collections::BTreeSet<Polyhedron> = cells.iter().cloned().collect();
            let mut queue = cells.clone();
            while let Some(c) = queue.pop() {
                for f in c.faces() {
                    if seen.insert(f.clone()) {
                        cells.push(f.clone());
                        queue.push(f);
                    }
                }
            }
        }

        let with_dims = sort_canonical(cells);
        let cells: Vec<Polyhedron> = with_dims.iter().map(|(c, _)| c.clone()).collect();
        let dims: Vec<usize> = with_dims.iter().map(|(_, d)| *d).collect();
        let index: BTreeMap<&Polyhedron, CellId> =
            cells.iter().enumerate().map(|(i, c)| (c, i)).collect();

        // face lists, closure check
        let mut all_faces: Vec<Vec<Polyhedron>> = Vec::with_capacity(cells.len());
        for (i, c) in cells.iter().enumerate() {
            let faces = c.faces();
            for f in &faces {
                if f != c && !index.contains_key(f) {
                    return Err(Error::NotClosedUnderFaces {
                        parent: cells[i].to_string(),
                        face: f.to_string(),
                    });
                }
            }
            all_faces.push(faces);
        }

        // pairwise intersections must be common faces
        for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                if let Some(w) = cells[i].intersect(&cells[j]) {
                    let ok = all_faces[i].contains(&w) && all_faces[j].contains(&w);
                    if !ok {
                        return Err(Error::BadIntersection {
                            a: cells[i].to_string(),
                            b: cells[j].to_string(),
                        });
                    }
                }
            }
        }

        // facet relation
        let mut facets_of: Vec<Vec<CellId>> = vec![Vec::new(); cells.len()];
        let mut cofacets_of: Vec<Vec<CellId>> = vec![Vec::new(); cells.len()];
        for (i, c) in cells.iter().enumerate() {
            for f in c.facets() {
                let fid = *index.get(&f).expect("closure was checked");
                facets_of[i].push(fid);
                cofacets_of[fid].push(i);
            }
            facets_of[i].sort_unstable();
        }
        for v in cofacets_of.iter_mut() {
            v.sort_unstable();
        }

        let input_map = input
            .iter()
            .map(|c| *index.get(c).expect("input cells are present"))
            .collect();
        Ok((
            PolyhedralComplex {
                ambient,
                cells,
                dims,
                facets_of,
                cofacets_of,
            },
            input_map,
        ))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn cells(&self) -> &[Polyhedron] {
        &self.cells
    }

    pub fn cell(&self, id: CellId) -> &Polyhedron {
        &self.cells[id]
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_dim(&self, id: CellId) -> usize {
        self.dims[id]
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().copied().max().unwrap_or(0)
    }

    /// `Some(d)` when every maximal cell has dimension `d`.
    pub fn pure_dim(&self) -> Option<usize> {
        let d = self.dim();
        if self
            .maximal_cells()
            .iter()
            .all(|&i| self.dims[i] == d)
        {
            Some(d)
        } else {
            None
        }
    }

    pub fn facet_ids(&self, id: CellId) -> &[CellId] {
        &self.facets_of[id]
    }

    pub fn cofacet_ids(&self, id: CellId) -> &[CellId] {
        &self.cofacets_of[id]
    }

    pub fn maximal_cells(&self) -> Vec<CellId> {
        (0..self.cells.len())
            .filter(|&i| self.cofacets_of[i].is_empty())
            .collect()
    }

    pub fn find_cell(&self, p: &Polyhedron) -> Option<CellId> {
        self.cells.iter().position(|c| c == p)
    }

    /// Smallest cell containing `q`, if any (unique in a valid complex).
    pub fn minimal_cell_containing(&self, q: &Polyhedron) -> Option<CellId> {
        let mut best: Option<CellId> = None;
        for (i, c) in self.cells.iter().enumerate() {
            if c.contains(q) {
                best = match best {
                    None => Some(i),
                    Some(b) => {
                        if self.dims[i] < self.dims[b] {
                            Some(i)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
        }
        best
    }

    pub fn cell_containing_point(&self, p: &[Rat]) -> Option<CellId> {
        let mut best: Option<CellId> = None;
        for (i, c) in self.cells.iter().enumerate() {
            if c.contains_point(p) {
                best = match best {
                    None => Some(i),
                    Some(b) => {
                        if self.dims[i] < self.dims[b] {
                            Some(i)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
        }
        best
    }

    /// Local completeness criterion: top cells have full dimension and every
    /// codimension-one cell lies in exactly two top cells.
    pub fn is_complete(&self) -> bool {
        let n = self.ambient;
        let tops = self.maximal_cells();
        if tops.is_empty() || tops.iter().any(|&i| self.dims[i] != n) {
            return false;
        }
        (0..self.cells.len()).all(|i| {
            if self.dims[i] + 1 == n {
                self.cofacets_of[i]
                    .iter()
                    .filter(|&&j| self.dims[j] == n)
                    .count()
                    == 2
            } else {
                true
            }
        })
    }

    /// Subcomplex of cells without rays or lineality.
    pub fn bounded_subcomplex(&self) -> Result<PolyhedralComplex> {
        let cells: Vec<Polyhedron> = self
            .cells
            .iter()
            .filter(|c| c.is_bounded())
            .cloned()
            .collect();
        if cells.is_empty() {
            return Err(Error::InvalidInput("complex has no bounded cells".into()));
        }
        Ok(Self::validate(self.ambient, cells)?.0)
    }

    pub fn scale(&self, factor: &Rat) -> PolyhedralComplex {
        let cells: Vec<Polyhedron> = self.cells.iter().map(|c| c.scale(factor)).collect();
        Self::validate(self.ambient, cells)
            .expect("scaling preserves validity")
            .0
    }

    /// Least `d` making all vertices integral, together with `d * Sigma`.
    pub fn rescale_to_integral(&self) -> (BigInt, PolyhedralComplex) {
        let d = lcm_denominators(self.cells.iter().flat_map(|c| c.vertices().iter().flatten()));
        if d.is_one() {
            return (d, self.clone());
        }
        let scaled = self.scale(&Rat::from_integer(d.clone()));
        (d, scaled)
    }

    pub fn is_integral(&self) -> bool {
        self.cells
            .iter()
            .all(|c| c.vertices().iter().flatten().all(rat_is_integer))
    }
}

// ---------------------------------------------------------------------------
// fans and the cone construction
// ---------------------------------------------------------------------------

/// A complex whose cells are all cones with apex at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    complex: PolyhedralComplex,
}

impl Fan {
    pub fn try_new(complex: PolyhedralComplex) -> Result<Fan> {
        for c in complex.cells() {
            if !c.is_cone() {
                return Err(Error::InvalidInput(format!(
                    "fan cell {c} is not a cone with apex at the origin"
                )));
            }
        }
        Ok(Fan { complex })
    }

    pub fn complex(&self) -> &PolyhedralComplex {
        &self.complex
    }

    pub fn ambient_dim(&self) -> usize {
        self.complex.ambient_dim()
    }

    /// Fan cells meeting the open upper halfspace of the last coordinate.
    pub fn positive_cells(&self) -> Vec<CellId> {
        let a = self.ambient_dim() - 1;
        (0..self.complex.len())
            .filter(|&i| {
                self.complex.cell(i)
                    .rays()
                    .iter()
                    .any(|r| r[a].is_positive())
            })
            .collect()
    }

    /// Intersection with the affine hyperplane `{last = h}`, re-embedded one
    /// dimension down. Requires a cone-over style fan: every maximal cone
    /// must meet the open upper halfspace.
    pub fn slice(&self, h: &Rat) -> Result<PolyhedralComplex> {
        if !h.is_positive() {
            return Err(Error::InvalidInput("slice height must be positive".into()));
        }
        let n = self.ambient_dim() - 1;
        if n == 0 {
            return Err(Error::InvalidInput("cannot slice a fan on a line".into()));
        }
        for &i in &self.complex.maximal_cells() {
            let c = self.complex.cell(i);
            let positive = c.rays().iter().any(|r| r[n].is_positive());
            if !positive {
                return Err(Error::FanNotSliceable(format!(
                    "cone {c} at height zero is not a face of a positive cone"
                )));
            }
            if c.lineality().iter().any(|l| !l[n].is_zero()) {
                return Err(Error::FanNotSliceable(format!(
                    "cone {c} has lineality leaving the slicing hyperplane"
                )));
            }
        }
        let mut cells = Vec::new();
        for i in 0..self.complex.len() {
            let c = self.complex.cell(i);
            if !c.rays().iter().any(|r| r[n].is_positive()) {
                continue;
            }
            let mut points: Vec<Vec<Rat>> = Vec::new();
            let mut rays: Vec<Vec<BigInt>> = Vec::new();
            for r in c.rays() {
                if r[n].is_positive() {
                    let t = h / Rat::from_integer(r[n].clone());
                    points.push(r[..n].iter().map(|x| Rat::from_integer(x.clone()) * t.clone()).collect());
                } else {
                    rays.push(r[..n].to_vec());
                }
            }
            let lineality: Vec<Vec<BigInt>> =
                c.lineality().iter().map(|l| l[..n].to_vec()).collect();
            cells.push(Polyhedron::from_generators(n, points, rays, lineality)?);
        }
        Ok(PolyhedralComplex::validate(n, cells)?.0)
    }

    pub fn maximal_cells(&self) -> Vec<CellId> {
        self.complex.maximal_cells()
    }
}

/// Tags of the cone construction: each cone is either the cone over a base
/// cell or the height-zero recession cone of one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeTag {
    Lifted(CellId),
    Recession(CellId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDecoration {
    /// one tag per fan cell, indexed by fan cell id
    pub tags: Vec<ConeTag>,
}

/// The fan over a polyhedral complex: for each base cell `P` the closure
/// `P~` of the cone over `P x {1}`, together with the height-zero cones
/// `P_0 = P~ ∩ {last = 0}`. Validation failures surface when the input is
/// not completable enough for the collection to be a fan.
pub fn cone_over(sigma: &PolyhedralComplex) -> Result<(Fan, ConeDecoration)> {
    let n = sigma.ambient_dim();
    let mut cells: Vec<Polyhedron> = Vec::new();
    let mut lifted: Vec<Polyhedron> = Vec::new();
    let mut recessions: Vec<Polyhedron> = Vec::new();
    for c in sigma.cells() {
        let mut rays: Vec<Vec<BigInt>> = Vec::new();
        for v in c.vertices() {
            let mut lift: Vec<Rat> = v.clone();
            lift.push(Rat::one());
            rays.push(crate::lattice::primitive_dir(&lift));
        }
        for r in c.rays() {
            let mut lift = r.clone();
            lift.push(BigInt::zero());
            rays.push(lift);
        }
        let lineality: Vec<Vec<BigInt>> = c
            .lineality()
            .iter()
            .map(|l| {
                let mut lift = l.clone();
                lift.push(BigInt::zero());
                lift
            })
            .collect();
        let tilde = Polyhedron::cone(n + 1, rays, lineality)?;
        let rec = tilde.recession_at_height_zero(n);
        lifted.push(tilde.clone());
        recessions.push(rec.clone());
        cells.push(tilde);
        cells.push(rec);
    }
    let (complex, _) = PolyhedralComplex::validate(n + 1, cells)?;
    let fan = Fan::try_new(complex)?;
    let mut tags = Vec::with_capacity(fan.complex().len());
    for cell in fan.complex().cells() {
        if let Some(i) = lifted.iter().position(|t| t == cell) {
            tags.push(ConeTag::Lifted(i));
        } else if let Some(i) = recessions.iter().position(|r| r == cell) {
            tags.push(ConeTag::Recession(i));
        } else {
            return Err(Error::InvalidInput(format!(
                "cone construction produced an untagged cell {cell}"
            )));
        }
    }
    Ok((fan, ConeDecoration { tags }))
}

/// The limit of `a * Sigma` as `a` approaches zero: the height-zero part of
/// the cone construction, re-embedded in the base space.
pub fn recession_fan(sigma: &PolyhedralComplex) -> Result<Fan> {
    let n = sigma.ambient_dim();
    let (fan, _) = cone_over(sigma)?;
    let a = n; // last coordinate index in the lifted space
    let cells: Vec<Polyhedron> = fan
        .complex()
        .cells()
        .iter()
        .filter(|c| c.rays().iter().all(|r| r[a].is_zero()))
        .map(|c| {
            let rays: Vec<Vec<BigInt>> = c.rays().iter().map(|r| r[..n].to_vec()).collect();
            let lineality: Vec<Vec<BigInt>> =
                c.lineality().iter().map(|l| l[..n].to_vec()).collect();
            Polyhedron::cone(n, rays, lineality)
        })
        .collect::<Result<_>>()?;
    let (complex, _) = PolyhedralComplex::validate(n, cells)?;
    Fan::try_new(complex)
}

impl Polyhedron {
    /// For a cone living one dimension up: its face in `{last = 0}`.
    pub(crate) fn recession_at_height_zero(&self, _n: usize) -> Polyhedron {
        let a = self.ambient_dim() - 1;
        let rays: Vec<Vec<BigInt>> = self
            .rays()
            .iter()
            .filter(|r| r[a].is_zero())
            .cloned()
            .collect();
        Polyhedron::cone(self.ambient_dim(), rays, self.lineality().to_vec())
            .expect("recession cone is well formed")
    }
}
