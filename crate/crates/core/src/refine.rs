//! Simplicialization and unimodularization of cone-over fans.
//!
//! Both refinements are driven by star subdivisions. Simplicialization star
//! subdivides at every existing ray in lexicographic order, which needs no
//! new rays; unimodularization repeatedly picks a cone of multiplicity
//! greater than one and subdivides at a lattice point of its half-open
//! fundamental parallelepiped. The step log is replayable: star subdividing
//! the cone over the rescaled base at the recorded points in order
//! reproduces the refined fan.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::complex::{cone_over, Fan, PolyhedralComplex};
use crate::error::{Error, Result};
use crate::lattice::parallelepiped_points;
use crate::matrix::{snf, IntegerMatrix};
use crate::polyhedron::Polyhedron;
use crate::rat::{rat_vec, Rat};

/// One star subdivision: the cone whose relative interior holds the point
/// (given by its sorted primitive ray list), and the point itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StellarStep {
    pub cone: Vec<Vec<BigInt>>,
    pub point: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementReport {
    pub d: BigInt,
    pub stellar_steps: Vec<StellarStep>,
    pub preserved_recession: bool,
}

/// Index of the sublattice spanned by a linearly independent ray family
/// inside the lattice of its span; 1 means the family extends to a basis.
pub fn multiplicity_of_ray_family(rays: &[Vec<BigInt>]) -> Result<BigInt> {
    if rays.is_empty() {
        return Ok(BigInt::one());
    }
    let m = IntegerMatrix::from_rows(rays.to_vec());
    let res = snf(&m);
    if res.rank() < rays.len() {
        return Err(Error::NotSimplicial(
            "ray generators are linearly dependent".into(),
        ));
    }
    Ok(res.divisors().iter().product())
}

/// Multiplicity of a simplicial cone; `NotSimplicial` when the cone has
/// lineality or more extreme rays than its dimension.
pub fn cone_multiplicity(cone: &Polyhedron) -> Result<BigInt> {
    if !cone.is_cone() {
        return Err(Error::NotSimplicial(format!("{cone} is not a cone")));
    }
    if !cone.lineality().is_empty() {
        return Err(Error::NotSimplicial(format!("{cone} has lineality")));
    }
    multiplicity_of_ray_family(cone.rays())
        .map_err(|_| Error::NotSimplicial(format!("{cone} is not simplicial")))
}

fn is_simplicial(cone: &Polyhedron) -> bool {
    cone.is_cone()
        && cone.lineality().is_empty()
        && (cone.rays().is_empty() || {
            let m = IntegerMatrix::from_rows(cone.rays().to_vec());
            snf(&m).rank() == cone.rays().len()
        })
}

fn fan_from_maximal(ambient: usize, max_cones: Vec<Polyhedron>) -> Result<Fan> {
    let (complex, _) = PolyhedralComplex::synthesize(ambient, max_cones)?;
    Fan::try_new(complex)
}

/// Star subdivision of the fan at a primitive lattice point: every cone
/// containing the point is replaced by the joins of the point with its
/// facets not containing it.
pub fn star_subdivide(fan: &Fan, point: &[BigInt]) -> Result<Fan> {
    let ambient = fan.ambient_dim();
    if point.len() != ambient || point.iter().all(|x| x.is_zero()) {
        return Err(Error::InvalidInput("bad stellar point".into()));
    }
    let p_rat = rat_vec(point);
    let mut touched = false;
    let mut new_max: Vec<Polyhedron> = Vec::new();
    for &i in &fan.maximal_cells() {
        let c = fan.complex().cell(i);
        if !c.contains_point(&p_rat) {
            new_max.push(c.clone());
            continue;
        }
        touched = true;
        for facet in c.facets() {
            if facet.contains_point(&p_rat) {
                continue;
            }
            let mut rays = facet.rays().to_vec();
            rays.push(crate::lattice::primitive_vector(point)?);
            new_max.push(Polyhedron::cone(ambient, rays, facet.lineality().to_vec())?);
        }
    }
    if !touched {
        return Err(Error::InvalidInput(
            "stellar point lies outside the fan support".into(),
        ));
    }
    new_max.sort();
    new_max.dedup();
    fan_from_maximal(ambient, new_max)
}

/// All rays (one-dimensional cells) of the fan, as primitive vectors in
/// lexicographic order.
fn fan_rays(fan: &Fan) -> Vec<Vec<BigInt>> {
    let mut rays: Vec<Vec<BigInt>> = (0..fan.complex().len())
        .filter(|&i| fan.complex().cell_dim(i) == 1 && fan.complex().cell(i).lineality().is_empty())
        .map(|i| fan.complex().cell(i).rays()[0].clone())
        .collect();
    rays.sort();
    rays
}

/// Triangulates every cone using only existing rays, by star subdividing at
/// each ray in lexicographic order. Cones with lineality are not supported.
pub fn simplicialize(fan: &Fan) -> Result<(Fan, Vec<StellarStep>)> {
    for c in fan.complex().cells() {
        if !c.lineality().is_empty() {
            return Err(Error::Unsupported(format!(
                "cannot simplicialize a fan with lineality (cell {c})"
            )));
        }
    }
    let mut fan = fan.clone();
    let mut steps = Vec::new();
    for ray in fan_rays(&fan) {
        let needs = fan.maximal_cells().iter().any(|&i| {
            let c = fan.complex().cell(i);
            !is_simplicial(c) && c.contains_point(&rat_vec(&ray))
        });
        if !needs {
            continue;
        }
        fan = star_subdivide(&fan, &ray)?;
        steps.push(StellarStep {
            cone: vec![ray.clone()],
            point: ray,
        });
    }
    debug_assert!(fan
        .maximal_cells()
        .iter()
        .all(|&i| is_simplicial(fan.complex().cell(i))));
    Ok((fan, steps))
}

fn multiplicity_multiset(fan: &Fan) -> Result<Vec<BigInt>> {
    let mut mults: Vec<BigInt> = fan
        .maximal_cells()
        .iter()
        .map(|&i| cone_multiplicity(fan.complex().cell(i)))
        .collect::<Result<_>>()?;
    mults.sort();
    mults.reverse();
    Ok(mults)
}

fn multiset_decreased(before: &[BigInt], after: &[BigInt]) -> bool {
    // descending lexicographic comparison; shorter prefix-equal is smaller
    for (a, b) in after.iter().zip(before) {
        if a < b {
            return true;
        }
        if a > b {
            return false;
        }
    }
    after.len() < before.len()
}

/// Makes every simplicial cone unimodular by stellar descent: pick a cone of
/// multiplicity m > 1, subdivide at the lattice point of its half-open
/// fundamental parallelepiped with minimal coefficient sum. Points at
/// positive last coordinate are preferred, ties broken by lexicographically
/// smallest point. The multiplicity multiset strictly drops each step.
pub fn resolve_unimodular(fan: &Fan) -> Result<(Fan, Vec<StellarStep>)> {
    let mut fan = fan.clone();
    let mut steps = Vec::new();
    let mut prev = multiplicity_multiset(&fan)?;
    loop {
        let maxes = fan.maximal_cells();
        let mut worst: Option<(BigInt, &Polyhedron)> = None;
        for &i in &maxes {
            let c = fan.complex().cell(i);
            let m = cone_multiplicity(c)?;
            if m.is_one() {
                continue;
            }
            worst = match worst {
                None => Some((m, c)),
                Some((wm, wc)) => {
                    if m > wm || (m == wm && c.rays() < wc.rays()) {
                        Some((m, c))
                    } else {
                        Some((wm, wc))
                    }
                }
            };
        }
        let Some((_, cone)) = worst else {
            break;
        };
        let cone_rays = cone.rays().to_vec();
        let candidates = parallelepiped_points(&cone_rays)?;
        let a = fan.ambient_dim() - 1;
        let any_positive = candidates.iter().any(|p| p.point[a].is_positive());
        let chosen = candidates
            .iter()
            .filter(|p| !any_positive || p.point[a].is_positive())
            .min_by(|x, y| {
                (x.coeff_sum(), &x.point).cmp(&(y.coeff_sum(), &y.point))
            })
            .expect("multiplicity > 1 yields a candidate")
            .clone();
        let support: Vec<Vec<BigInt>> = cone_rays
            .iter()
            .zip(&chosen.coeffs)
            .filter(|(_, t)| !t.is_zero())
            .map(|(r, _)| r.clone())
            .collect();
        fan = star_subdivide(&fan, &chosen.point)?;
        steps.push(StellarStep {
            cone: support,
            point: chosen.point,
        });
        let cur = multiplicity_multiset(&fan)?;
        assert!(
            multiset_decreased(&prev, &cur),
            "termination metric failed to decrease: {prev:?} -> {cur:?}"
        );
        prev = cur;
    }
    Ok((fan, steps))
}

fn rescale_step(step: &StellarStep, l: &BigInt, ambient: usize) -> StellarStep {
    let scale = |v: &Vec<BigInt>| -> Vec<BigInt> {
        let mut w: Vec<BigInt> = v[..ambient - 1].iter().map(|x| x * l).collect();
        w.push(v[ambient - 1].clone());
        crate::lattice::primitive_vector(&w).expect("nonzero")
    };
    StellarStep {
        cone: step.cone.iter().map(scale).collect(),
        point: scale(&step.point),
    }
}

/// The normal-crossings decomposition pipeline: rescale to integral vertices,
/// take the cone over the complex, simplicialize, unimodularize, and slice
/// back at height one. Rescaling repeats while the slice has non-integral
/// vertices; `d` is the product of all rescale factors.
pub fn nc_decomposition(
    sigma: &PolyhedralComplex,
) -> Result<(BigInt, PolyhedralComplex, RefinementReport)> {
    const MAX_ROUNDS: usize = 64;
    let mut current = sigma.clone();
    let mut d = BigInt::one();
    let mut steps: Vec<StellarStep> = Vec::new();
    let ambient = sigma.ambient_dim() + 1;
    for _ in 0..MAX_ROUNDS {
        let (l, scaled) = current.rescale_to_integral();
        if !l.is_one() {
            d *= &l;
            steps = steps.iter().map(|s| rescale_step(s, &l, ambient)).collect();
        }
        current = scaled;
        let (fan, _) = cone_over(&current)?;
        let (fan, s1) = simplicialize(&fan)?;
        let (fan, s2) = resolve_unimodular(&fan)?;
        steps.extend(s1);
        steps.extend(s2);
        let sliced = fan.slice(&Rat::one())?;
        if sliced.is_integral() {
            let height = ambient - 1;
            let preserved = steps.iter().all(|s| !s.point[height].is_zero());
            return Ok((
                d.clone(),
                sliced,
                RefinementReport {
                    d,
                    stellar_steps: steps,
                    preserved_recession: preserved,
                },
            ));
        }
        current = sliced;
    }
    Err(Error::InvalidInput(
        "unimodular resolution did not reach an integral slice".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::recession_fan;
    use crate::rat::{int_vec, rat, rat_int};

    fn cone2(rays: &[&[i64]]) -> Polyhedron {
        Polyhedron::cone(2, rays.iter().map(|r| int_vec(r)).collect(), vec![]).unwrap()
    }

    fn fan_of(maximal: Vec<Polyhedron>) -> Fan {
        let ambient = maximal[0].ambient_dim();
        fan_from_maximal(ambient, maximal).unwrap()
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(
            cone_multiplicity(&cone2(&[&[1, 0], &[0, 1]])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            cone_multiplicity(&cone2(&[&[1, 0], &[1, 2]])).unwrap(),
            BigInt::from(2)
        );
        match cone_multiplicity(&cone2(&[&[1, 0], &[1, 1], &[0, 1]])) {
            Err(Error::NotSimplicial(_)) => {}
            other => panic!("expected NotSimplicial, got {other:?}"),
        }
    }

    #[test]
    fn simplicialize_keeps_simplicial_fans() {
        let fan = fan_of(vec![cone2(&[&[1, 0], &[0, 1]]), cone2(&[&[0, 1], &[-1, 0]])]);
        let (out, steps) = simplicialize(&fan).unwrap();
        assert!(steps.is_empty());
        assert_eq!(&out, &fan);
    }

    #[test]
    fn simplicialize_cone_over_square() {
        let square_cone = Polyhedron::cone(
            3,
            vec![
                int_vec(&[0, 0, 1]),
                int_vec(&[1, 0, 1]),
                int_vec(&[0, 1, 1]),
                int_vec(&[1, 1, 1]),
            ],
            vec![],
        )
        .unwrap();
        let fan = fan_of(vec![square_cone]);
        let (out, steps) = simplicialize(&fan).unwrap();
        assert_eq!(steps.len(), 1);
        let maxes = out.maximal_cells();
        assert_eq!(maxes.len(), 2);
        // both pieces share the diagonal through the lex-smallest ray (0,0,1)
        let diag = Polyhedron::cone(3, vec![int_vec(&[0, 0, 1]), int_vec(&[1, 1, 1])], vec![])
            .unwrap();
        assert!(out.complex().cells().contains(&diag));
        for &i in &maxes {
            assert!(is_simplicial(out.complex().cell(i)));
        }
    }

    #[test]
    fn resolve_index_two_cone() {
        let fan = fan_of(vec![cone2(&[&[1, 0], &[1, 2]])]);
        let (out, steps) = resolve_unimodular(&fan).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].point, int_vec(&[1, 1]));
        let expected_a = cone2(&[&[1, 0], &[1, 1]]);
        let expected_b = cone2(&[&[1, 1], &[1, 2]]);
        assert!(out.complex().cells().contains(&expected_a));
        assert!(out.complex().cells().contains(&expected_b));
        for &i in &out.maximal_cells() {
            assert!(cone_multiplicity(out.complex().cell(i)).unwrap().is_one());
        }
    }

    #[test]
    fn resolve_unimodular_fan_is_identity() {
        let fan = fan_of(vec![cone2(&[&[1, 0], &[0, 1]])]);
        let (out, steps) = resolve_unimodular(&fan).unwrap();
        assert!(steps.is_empty());
        assert_eq!(&out, &fan);
    }

    #[test]
    fn resolve_index_three_cone() {
        let fan = fan_of(vec![cone2(&[&[1, 0], &[1, 3]])]);
        let (out, steps) = resolve_unimodular(&fan).unwrap();
        assert_eq!(steps.len(), 2);
        let rays = fan_rays(&out);
        assert!(rays.contains(&int_vec(&[1, 1])));
        assert!(rays.contains(&int_vec(&[1, 2])));
        assert_eq!(out.maximal_cells().len(), 3);
        for &i in &out.maximal_cells() {
            assert!(cone_multiplicity(out.complex().cell(i)).unwrap().is_one());
        }
    }

    #[test]
    fn nc_on_already_unimodular_line() {
        let sigma = crate::complex::tests::complete_line();
        let (d, out, report) = nc_decomposition(&sigma).unwrap();
        assert_eq!(d, BigInt::from(1));
        assert_eq!(out, sigma);
        assert!(report.stellar_steps.is_empty());
        assert!(report.preserved_recession);
    }

    #[test]
    fn nc_rescales_half_integral_vertex() {
        // vertex at 1/2 with rays to both sides
        let v = vec![rat(1, 2)];
        let left = Polyhedron::from_generators(1, vec![v.clone()], vec![int_vec(&[-1])], vec![])
            .unwrap();
        let right = Polyhedron::from_generators(1, vec![v.clone()], vec![int_vec(&[1])], vec![])
            .unwrap();
        let sigma = PolyhedralComplex::validate(
            1,
            vec![left, right, Polyhedron::point(v)],
        )
        .unwrap()
        .0;
        let (d, out, report) = nc_decomposition(&sigma).unwrap();
        assert_eq!(d, BigInt::from(2));
        assert!(out
            .cells()
            .contains(&Polyhedron::point(vec![rat_int(1)])));
        assert!(report.preserved_recession);
    }

    #[test]
    fn nc_on_steep_segment() {
        // segment from (0,0) to (1,2) with endpoints; cone over it is
        // unimodular already since the segment is primitive
        let seg = crate::complex::tests::segment(&[0, 0], &[1, 2]);
        let (sigma, _) = PolyhedralComplex::synthesize(2, vec![seg]).unwrap();
        let (_, out, _) = nc_decomposition(&sigma).unwrap();
        let (fan, _) = cone_over(&out).unwrap();
        for &i in &fan.maximal_cells() {
            assert!(cone_multiplicity(fan.complex().cell(i)).unwrap().is_one());
        }
        // every refined segment has lattice length one
        for c in out.cells() {
            if c.is_bounded() && c.vertices().len() == 2 {
                let vol = crate::lattice::lattice_volume_rat(c.vertices()).unwrap();
                assert_eq!(vol, rat_int(1));
            }
        }
    }

    #[test]
    fn nc_replay_reproduces_fan() {
        // the cone over [(0,0),(2,2)] has index 2, so one stellar step fires
        let seg = crate::complex::tests::segment(&[0, 0], &[2, 2]);
        let (sigma, _) = PolyhedralComplex::synthesize(2, vec![seg]).unwrap();
        let (d, out, report) = nc_decomposition(&sigma).unwrap();
        assert_eq!(report.stellar_steps.len(), 1);
        assert!(out
            .cells()
            .contains(&Polyhedron::point(pt_helper(&[1, 1]))));
        let scaled = sigma.scale(&Rat::from_integer(d));
        let (mut fan, _) = cone_over(&scaled).unwrap();
        for step in &report.stellar_steps {
            fan = star_subdivide(&fan, &step.point).unwrap();
        }
        let (expected, _) = cone_over(&out).unwrap();
        assert_eq!(fan, expected);
    }

    fn pt_helper(coords: &[i64]) -> Vec<Rat> {
        coords.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn nc_preserves_unimodular_recession() {
        // vertex at 1/2 with both rays: recession fan is the complete line,
        // already unimodular; the refinement must not touch it
        let v = vec![rat(1, 2)];
        let left = Polyhedron::from_generators(1, vec![v.clone()], vec![int_vec(&[-1])], vec![])
            .unwrap();
        let right = Polyhedron::from_generators(1, vec![v.clone()], vec![int_vec(&[1])], vec![])
            .unwrap();
        let sigma =
            PolyhedralComplex::validate(1, vec![left, right, Polyhedron::point(v)]).unwrap().0;
        let (_, out, report) = nc_decomposition(&sigma).unwrap();
        assert!(report.preserved_recession);
        assert_eq!(
            recession_fan(&out).unwrap(),
            recession_fan(&sigma).unwrap()
        );
    }

    #[test]
    fn refinement_soundness_by_sampling() {
        let seg = crate::complex::tests::segment(&[0, 0], &[2, 2]);
        let (sigma, _) = PolyhedralComplex::synthesize(2, vec![seg]).unwrap();
        let (d, out, _) = nc_decomposition(&sigma).unwrap();
        let scaled = sigma.scale(&Rat::from_integer(d));
        // every output cell lies in exactly one minimal input cell, and
        // sampled points land in the output iff they land in the input
        for c in out.cells() {
            assert!(scaled.minimal_cell_containing(c).is_some());
        }
        let samples: Vec<Vec<Rat>> = out
            .cells()
            .iter()
            .map(|c| c.relint_point())
            .chain([vec![rat(7, 3), rat(1, 7)], vec![rat_int(-5), rat_int(2)]])
            .collect();
        for s in &samples {
            let in_out = out.cell_containing_point(s).is_some();
            let in_scaled = scaled.cell_containing_point(s).is_some();
            assert_eq!(in_out, in_scaled);
        }
    }
}
