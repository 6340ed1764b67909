//! Rational polyhedra in V-representation, backed by a double description
//! kernel on homogenization cones.
//!
//! A polyhedron is stored canonically: base points sorted and reduced modulo
//! the lineality space, rays primitive and sorted, lineality as a Hermite
//! basis. Equality of canonical forms is equality of polyhedra, so cells can
//! be used as map keys and compared across constructions.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::row_hnf;
use crate::lattice::primitive_dir;
use crate::rat::{dot, dot_int_rat, rat_rank, rat_to_string, rat_vec, Rat};

// ---------------------------------------------------------------------------
// double description
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct DdRay {
    dir: Vec<Rat>,
    tight: BTreeSet<usize>,
}

fn unit(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::from_integer(BigInt::from(1));
    v
}

fn sub_scaled(v: &mut [Rat], w: &[Rat], c: &Rat) {
    for (x, y) in v.iter_mut().zip(w) {
        *x -= c * y;
    }
}

fn normalize_dir(v: &mut Vec<Rat>) {
    let ints = crate::rat::scale_to_integers(v);
    let prim = crate::lattice::primitive_vector(&ints).expect("nonzero direction");
    *v = rat_vec(&prim);
}

fn adjacent(rays: &[DdRay], i: usize, j: usize) -> bool {
    let t: BTreeSet<usize> = rays[i].tight.intersection(&rays[j].tight).cloned().collect();
    !rays
        .iter()
        .enumerate()
        .any(|(k, r)| k != i && k != j && t.is_subset(&r.tight))
}

/// Extreme rays and a lineality basis of the cone
/// `{x : e.x = 0 for all e in eqs, a.x >= 0 for all a in ineqs}`.
///
/// Incremental Motzkin double description with combinatorial adjacency.
/// Equalities are consumed first as lineality reductions.
pub(crate) fn dual_description(
    dim: usize,
    eqs: &[Vec<Rat>],
    ineqs: &[Vec<Rat>],
) -> (Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
    let mut lin: Vec<Vec<Rat>> = (0..dim).map(|i| unit(dim, i)).collect();
    let mut rays: Vec<DdRay> = Vec::new();

    for a in eqs {
        if let Some(p) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let pivot = lin.remove(p);
            let pv = dot(a, &pivot);
            for l in &mut lin {
                let c = dot(a, l);
                if !c.is_zero() {
                    sub_scaled(l, &pivot, &(c / pv.clone()));
                }
            }
            debug_assert!(rays.is_empty(), "equations are processed first");
        }
        // an equation vanishing on the current lineality is redundant here
        // (rays are empty while equations are processed)
    }

    for (idx, a) in ineqs.iter().enumerate() {
        if let Some(p) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut pivot = lin.remove(p);
            if dot(a, &pivot).is_negative() {
                for x in pivot.iter_mut() {
                    *x = -x.clone();
                }
            }
            let pv = dot(a, &pivot);
            for l in &mut lin {
                let c = dot(a, l);
                if !c.is_zero() {
                    sub_scaled(l, &pivot, &(c / pv.clone()));
                }
            }
            for r in &mut rays {
                let c = dot(a, &r.dir);
                if !c.is_zero() {
                    sub_scaled(&mut r.dir, &pivot, &(c / pv.clone()));
                }
                // after the adjustment every old ray lies on the new hyperplane
                r.tight.insert(idx);
            }
            normalize_dir(&mut pivot);
            rays.push(DdRay {
                dir: pivot,
                tight: (0..idx).collect(),
            });
            continue;
        }
        let vals: Vec<Rat> = rays.iter().map(|r| dot(a, &r.dir)).collect();
        let mut created: Vec<DdRay> = Vec::new();
        for (i, ri) in rays.iter().enumerate() {
            if !vals[i].is_positive() {
                continue;
            }
            for (j, rj) in rays.iter().enumerate() {
                if !vals[j].is_negative() {
                    continue;
                }
                if !adjacent(&rays, i, j) {
                    continue;
                }
                let mut dir = vec![Rat::zero(); dim];
                for k in 0..dim {
                    dir[k] = &vals[i] * &rj.dir[k] - &vals[j] * &ri.dir[k];
                }
                normalize_dir(&mut dir);
                let mut tight: BTreeSet<usize> =
                    ri.tight.intersection(&rj.tight).cloned().collect();
                tight.insert(idx);
                created.push(DdRay { dir, tight });
            }
        }
        let mut kept: Vec<DdRay> = Vec::new();
        for (i, r) in rays.into_iter().enumerate() {
            if vals[i].is_zero() {
                let mut r = r;
                r.tight.insert(idx);
                kept.push(r);
            } else if vals[i].is_positive() {
                kept.push(r);
            }
        }
        kept.extend(created);
        rays = kept;
    }

    (lin, rays.into_iter().map(|r| r.dir).collect())
}

// ---------------------------------------------------------------------------
// cone representations
// ---------------------------------------------------------------------------

/// Minimal H-representation of a cone: `eqs . x = 0`, `ineqs . x >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct HRep {
    pub dim: usize,
    pub eqs: Vec<Vec<BigInt>>,
    pub ineqs: Vec<Vec<BigInt>>,
}

impl HRep {
    pub fn satisfied_by(&self, x: &[Rat]) -> bool {
        self.eqs
            .iter()
            .all(|e| dot_int_rat(e, x).is_zero())
            && self
                .ineqs
                .iter()
                .all(|a| !dot_int_rat(a, x).is_negative())
    }
}

fn reduce_mod_hnf(v: &mut Vec<Rat>, basis: &[Vec<BigInt>]) {
    for b in basis {
        let p = b
            .iter()
            .position(|x| !x.is_zero())
            .expect("HNF basis rows are nonzero");
        if !v[p].is_zero() {
            let c = v[p].clone() / Rat::from_integer(b[p].clone());
            for (x, y) in v.iter_mut().zip(b) {
                *x -= &c * Rat::from_integer(y.clone());
            }
        }
    }
}

fn canonical_dirs(dirs: Vec<Vec<Rat>>, modulo: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = dirs
        .into_iter()
        .map(|mut d| {
            reduce_mod_hnf(&mut d, modulo);
            primitive_dir(&d)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Facet normals and span equations of `cone(gens) + span(lin_gens)`, via the
/// polar cone.
pub(crate) fn hrep_of_cone(dim: usize, gens: &[Vec<Rat>], lin_gens: &[Vec<Rat>]) -> HRep {
    let (polar_lin, polar_rays) = dual_description(dim, lin_gens, gens);
    let eqs = row_hnf(
        &polar_lin
            .iter()
            .map(|v| primitive_dir(v))
            .collect::<Vec<_>>(),
    );
    let ineqs = canonical_dirs(polar_rays, &eqs);
    HRep { dim, eqs, ineqs }
}

/// Extreme rays (mod lineality, canonical) and lineality basis of a cone
/// given by its H-representation.
pub(crate) fn vrep_of_cone(h: &HRep) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let eqs: Vec<Vec<Rat>> = h.eqs.iter().map(|e| rat_vec(e)).collect();
    let ineqs: Vec<Vec<Rat>> = h.ineqs.iter().map(|e| rat_vec(e)).collect();
    let (lin, rays) = dual_description(h.dim, &eqs, &ineqs);
    let lin_basis = row_hnf(&lin.iter().map(|v| primitive_dir(v)).collect::<Vec<_>>());
    let rays = canonical_dirs(rays, &lin_basis);
    (lin_basis, rays)
}

// ---------------------------------------------------------------------------
// polyhedron
// ---------------------------------------------------------------------------

/// `P = conv(vertices) + cone(rays) + span(lineality)`, canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polyhedron {
    ambient: usize,
    vertices: Vec<Vec<Rat>>,
    rays: Vec<Vec<BigInt>>,
    lineality: Vec<Vec<BigInt>>,
}

fn lift_point(p: &[Rat]) -> Vec<Rat> {
    let mut v = p.to_vec();
    v.push(Rat::from_integer(BigInt::from(1)));
    v
}

fn lift_dir(d: &[BigInt]) -> Vec<Rat> {
    let mut v = rat_vec(d);
    v.push(Rat::zero());
    v
}

impl Polyhedron {
    /// Canonicalizes arbitrary generators. Requires at least one point.
    pub fn from_generators(
        ambient: usize,
        points: Vec<Vec<Rat>>,
        rays: Vec<Vec<BigInt>>,
        lineality: Vec<Vec<BigInt>>,
    ) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::InvalidInput("ambient dimension must be >= 1".into()));
        }
        if points.is_empty() {
            return Err(Error::InvalidInput(
                "a polyhedron needs at least one point".into(),
            ));
        }
        for p in &points {
            if p.len() != ambient {
                return Err(Error::InvalidInput("point of wrong dimension".into()));
            }
        }
        for r in rays.iter().chain(&lineality) {
            if r.len() != ambient {
                return Err(Error::InvalidInput("direction of wrong dimension".into()));
            }
            if r.iter().all(|x| x.is_zero()) {
                return Err(Error::InvalidInput("zero ray or lineality vector".into()));
            }
        }
        let mut gens: Vec<Vec<Rat>> = points.iter().map(|p| lift_point(p)).collect();
        gens.extend(rays.iter().map(|r| lift_dir(r)));
        let lin_gens: Vec<Vec<Rat>> = lineality.iter().map(|l| lift_dir(l)).collect();
        let h = hrep_of_cone(ambient + 1, &gens, &lin_gens);
        Ok(Self::from_cone_vrep(ambient, vrep_of_cone(&h)))
    }

    pub fn point(coords: Vec<Rat>) -> Self {
        let ambient = coords.len();
        Polyhedron::from_generators(ambient, vec![coords], vec![], vec![]).unwrap()
    }

    pub fn cone(ambient: usize, rays: Vec<Vec<BigInt>>, lineality: Vec<Vec<BigInt>>) -> Result<Self> {
        Polyhedron::from_generators(ambient, vec![vec![Rat::zero(); ambient]], rays, lineality)
    }

    /// Assembles from the split V-representation of the homogenization cone.
    fn from_cone_vrep(ambient: usize, (lin, rays): (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>)) -> Self {
        let mut vertices: Vec<Vec<Rat>> = Vec::new();
        let mut recession: Vec<Vec<BigInt>> = Vec::new();
        for r in rays {
            let last = &r[ambient];
            if last.is_zero() {
                recession.push(r[..ambient].to_vec());
            } else {
                debug_assert!(last.is_positive());
                let l = Rat::from_integer(last.clone());
                vertices.push(
                    r[..ambient]
                        .iter()
                        .map(|x| Rat::from_integer(x.clone()) / l.clone())
                        .collect(),
                );
            }
        }
        let lineality: Vec<Vec<BigInt>> = lin
            .into_iter()
            .map(|l| {
                debug_assert!(l[ambient].is_zero());
                l[..ambient].to_vec()
            })
            .collect();
        let lineality = row_hnf(&lineality);
        vertices.sort();
        recession.sort();
        Polyhedron {
            ambient,
            vertices,
            rays: recession,
            lineality,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<BigInt>] {
        &self.lineality
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// A cone here means: single base point at the origin.
    pub fn is_cone(&self) -> bool {
        self.vertices.len() == 1 && self.vertices[0].iter().all(|x| x.is_zero())
    }

    pub fn dim(&self) -> usize {
        let mut dirs: Vec<Vec<Rat>> = Vec::new();
        for v in &self.vertices[1..] {
            dirs.push(
                v.iter()
                    .zip(&self.vertices[0])
                    .map(|(a, b)| a - b)
                    .collect(),
            );
        }
        dirs.extend(self.rays.iter().map(|r| rat_vec(r)));
        dirs.extend(self.lineality.iter().map(|l| rat_vec(l)));
        rat_rank(&dirs)
    }

    /// Direction span generators (rational rows).
    pub fn span_dirs(&self) -> Vec<Vec<Rat>> {
        let mut dirs: Vec<Vec<Rat>> = Vec::new();
        for v in &self.vertices[1..] {
            dirs.push(
                v.iter()
                    .zip(&self.vertices[0])
                    .map(|(a, b)| a - b)
                    .collect(),
            );
        }
        dirs.extend(self.rays.iter().map(|r| rat_vec(r)));
        dirs.extend(self.lineality.iter().map(|l| rat_vec(l)));
        dirs
    }

    /// H-representation of the homogenization cone in `R^{ambient+1}`.
    pub(crate) fn hom_hrep(&self) -> HRep {
        let mut gens: Vec<Vec<Rat>> = self.vertices.iter().map(|p| lift_point(p)).collect();
        gens.extend(self.rays.iter().map(|r| lift_dir(r)));
        let lin_gens: Vec<Vec<Rat>> = self.lineality.iter().map(|l| lift_dir(l)).collect();
        hrep_of_cone(self.ambient + 1, &gens, &lin_gens)
    }

    pub fn contains_point(&self, p: &[Rat]) -> bool {
        self.hom_hrep().satisfied_by(&lift_point(p))
    }

    /// Containment of a polyhedron: all generators of `other` must fit.
    pub fn contains(&self, other: &Polyhedron) -> bool {
        let h = self.hom_hrep();
        other.vertices.iter().all(|v| h.satisfied_by(&lift_point(v)))
            && other.rays.iter().all(|r| h.satisfied_by(&lift_dir(r)))
            && other.lineality.iter().all(|l| {
                let d = lift_dir(l);
                let neg: Vec<Rat> = d.iter().map(|x| -x.clone()).collect();
                h.satisfied_by(&d) && h.satisfied_by(&neg)
            })
    }

    /// All nonempty faces, including the polyhedron itself.
    pub fn faces(&self) -> Vec<Polyhedron> {
        let h = self.hom_hrep();
        let gens: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .map(|p| lift_point(p))
            .chain(self.rays.iter().map(|r| lift_dir(r)))
            .collect();
        let n_vertices = self.vertices.len();
        let incidence: Vec<BTreeSet<usize>> = gens
            .iter()
            .map(|g| {
                h.ineqs
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| dot_int_rat(a, g).is_zero())
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let full: BTreeSet<usize> = (0..gens.len()).collect();
        let facet_sets: Vec<BTreeSet<usize>> = h
            .ineqs
            .iter()
            .enumerate()
            .map(|(i, _)| {
                (0..gens.len())
                    .filter(|&g| incidence[g].contains(&i))
                    .collect()
            })
            .collect();
        let mut closed: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        closed.insert(full);
        let mut frontier: Vec<BTreeSet<usize>> = facet_sets.clone();
        while let Some(s) = frontier.pop() {
            if !closed.insert(s.clone()) {
                continue;
            }
            for f in &facet_sets {
                let t: BTreeSet<usize> = s.intersection(f).cloned().collect();
                if !closed.contains(&t) {
                    frontier.push(t);
                }
            }
        }
        closed
            .into_iter()
            .filter(|s| s.iter().any(|&g| g < n_vertices))
            .map(|s| {
                let vertices: Vec<Vec<Rat>> = s
                    .iter()
                    .filter(|&&g| g < n_vertices)
                    .map(|&g| self.vertices[g].clone())
                    .collect();
                let rays: Vec<Vec<BigInt>> = s
                    .iter()
                    .filter(|&&g| g >= n_vertices)
                    .map(|&g| self.rays[g - n_vertices].clone())
                    .collect();
                // subsets of canonical data are canonical
                Polyhedron {
                    ambient: self.ambient,
                    vertices,
                    rays,
                    lineality: self.lineality.clone(),
                }
            })
            .collect()
    }

    /// Maximal proper faces.
    pub fn facets(&self) -> Vec<Polyhedron> {
        let d = self.dim();
        if d == 0 {
            return vec![];
        }
        self.faces().into_iter().filter(|f| f.dim() + 1 == d).collect()
    }

    /// Exact intersection; `None` when empty.
    pub fn intersect(&self, other: &Polyhedron) -> Option<Polyhedron> {
        debug_assert_eq!(self.ambient, other.ambient);
        let h1 = self.hom_hrep();
        let h2 = other.hom_hrep();
        let h = HRep {
            dim: self.ambient + 1,
            eqs: [h1.eqs, h2.eqs].concat(),
            ineqs: [h1.ineqs, h2.ineqs].concat(),
        };
        let (lin, rays) = vrep_of_cone(&h);
        if !rays.iter().any(|r| r[self.ambient].is_positive()) {
            return None;
        }
        Some(Self::from_cone_vrep(self.ambient, (lin, rays)))
    }

    /// Recession cone, as a polyhedron with apex at the origin.
    pub fn recession(&self) -> Polyhedron {
        Polyhedron {
            ambient: self.ambient,
            vertices: vec![vec![Rat::zero(); self.ambient]],
            rays: self.rays.clone(),
            lineality: self.lineality.clone(),
        }
    }

    /// A rational point in the relative interior.
    pub fn relint_point(&self) -> Vec<Rat> {
        let k = Rat::from_integer(BigInt::from(self.vertices.len() as i64));
        let mut p = vec![Rat::zero(); self.ambient];
        for v in &self.vertices {
            for (x, y) in p.iter_mut().zip(v) {
                *x += y / k.clone();
            }
        }
        for r in &self.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += Rat::from_integer(y.clone());
            }
        }
        p
    }

    pub fn translate(&self, by: &[Rat]) -> Polyhedron {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(by).map(|(a, b)| a + b).collect())
            .collect();
        let mut out = self.clone();
        out.vertices = vertices;
        out.vertices.sort();
        out
    }

    /// Scales by a positive rational; directions are unchanged.
    pub fn scale(&self, factor: &Rat) -> Polyhedron {
        assert!(factor.is_positive());
        let vertices: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| x * factor).collect())
            .collect();
        let mut out = self.clone();
        out.vertices = vertices;
        out.vertices.sort();
        out
    }
}

impl fmt::Display for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self
            .vertices
            .iter()
            .map(|v| {
                format!(
                    "({})",
                    v.iter().map(rat_to_string).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        write!(f, "conv{{{}}}", vs.join(","))?;
        if !self.rays.is_empty() {
            let rs: Vec<String> = self
                .rays
                .iter()
                .map(|r| {
                    format!(
                        "({})",
                        r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                    )
                })
                .collect();
            write!(f, "+cone{{{}}}", rs.join(","))?;
        }
        if !self.lineality.is_empty() {
            let ls: Vec<String> = self
                .lineality
                .iter()
                .map(|r| {
                    format!(
                        "({})",
                        r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                    )
                })
                .collect();
            write!(f, "+span{{{}}}", ls.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int_vec, rat, rat_int};

    fn pt(coords: &[i64]) -> Vec<Rat> {
        coords.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn canonical_segment() {
        // redundant midpoint is dropped
        let p = Polyhedron::from_generators(
            1,
            vec![pt(&[0]), pt(&[2]), pt(&[1])],
            vec![],
            vec![],
        )
        .unwrap();
        assert_eq!(p.vertices().len(), 2);
        assert_eq!(p.dim(), 1);
        assert!(p.is_bounded());
    }

    #[test]
    fn canonical_cone_drops_interior_ray() {
        let c = Polyhedron::cone(
            2,
            vec![int_vec(&[1, 0]), int_vec(&[1, 1]), int_vec(&[0, 1])],
            vec![],
        )
        .unwrap();
        assert_eq!(c.rays().len(), 2);
        assert!(c.is_cone());
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn faces_of_square() {
        let square = Polyhedron::from_generators(
            2,
            vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])],
            vec![],
            vec![],
        )
        .unwrap();
        let faces = square.faces();
        // 4 vertices + 4 edges + the square
        assert_eq!(faces.len(), 9);
        assert_eq!(square.facets().len(), 4);
    }

    #[test]
    fn faces_of_unbounded_cell() {
        // vertex + one ray: faces are the vertex and the cell
        let p =
            Polyhedron::from_generators(2, vec![pt(&[1, 1])], vec![int_vec(&[1, 0])], vec![])
                .unwrap();
        let faces = p.faces();
        assert_eq!(faces.len(), 2);
        assert_eq!(p.facets().len(), 1);
        assert_eq!(p.facets()[0], Polyhedron::point(pt(&[1, 1])));
    }

    #[test]
    fn intersection_is_common_point() {
        let a = Polyhedron::from_generators(2, vec![pt(&[0, 0]), pt(&[2, 2])], vec![], vec![])
            .unwrap();
        let b = Polyhedron::from_generators(2, vec![pt(&[0, 2]), pt(&[2, 0])], vec![], vec![])
            .unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Polyhedron::point(pt(&[1, 1])));
    }

    #[test]
    fn empty_intersection() {
        let a = Polyhedron::point(pt(&[0, 0]));
        let b = Polyhedron::point(pt(&[1, 0]));
        assert!(a.intersect(&b).is_none());
    }

    #[test]
    fn containment_and_membership() {
        let half = Polyhedron::from_generators(
            2,
            vec![pt(&[0, 0])],
            vec![int_vec(&[1, 0]), int_vec(&[0, 1]), int_vec(&[1, 1])],
            vec![],
        )
        .unwrap();
        assert!(half.contains_point(&pt(&[3, 5])));
        assert!(!half.contains_point(&pt(&[-1, 0])));
        let edge = Polyhedron::from_generators(2, vec![pt(&[0, 0])], vec![int_vec(&[1, 0])], vec![])
            .unwrap();
        assert!(half.contains(&edge));
        assert!(!edge.contains(&half));
    }

    #[test]
    fn lineality_canonicalization() {
        // a line in R^2 through (0, 1/2) with direction (2, 0)
        let p = Polyhedron::from_generators(
            2,
            vec![vec![rat_int(3), rat(1, 2)]],
            vec![],
            vec![int_vec(&[2, 0])],
        )
        .unwrap();
        assert_eq!(p.lineality(), &[int_vec(&[1, 0])]);
        // base point is reduced mod lineality: x coordinate cleared
        assert_eq!(p.vertices(), &[vec![rat_int(0), rat(1, 2)]]);
        assert_eq!(p.dim(), 1);
        assert!(p.faces().len() == 1);
    }

    #[test]
    fn full_space_has_no_proper_faces() {
        let p = Polyhedron::from_generators(
            2,
            vec![pt(&[0, 0])],
            vec![],
            vec![int_vec(&[1, 0]), int_vec(&[0, 1])],
        )
        .unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.faces().len(), 1);
    }

    #[test]
    fn canonical_equality_across_generator_presentations() {
        let a = Polyhedron::from_generators(
            2,
            vec![pt(&[0, 0]), pt(&[1, 1])],
            vec![int_vec(&[2, 0])],
            vec![],
        )
        .unwrap();
        let b = Polyhedron::from_generators(
            2,
            vec![pt(&[1, 1]), pt(&[0, 0]), vec![rat(1, 2), rat(1, 2)]],
            vec![int_vec(&[1, 0])],
            vec![],
        )
        .unwrap();
        assert_eq!(a, b);
    }
}
