//! Lattice utilities on top of the Smith reduction: primitive vectors,
//! normalized lattice volumes, quotient-lattice charts, and the lattice
//! points of a half-open fundamental parallelepiped.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{snf_ext, IntegerMatrix};
use crate::rat::{lcm_denominators, rat_is_integer, scale_to_integers, Rat};

/// The smallest integer vector along the ray through `v`; sign preserved.
pub fn primitive_vector(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

pub fn primitive_from_rat(v: &[Rat]) -> Result<Vec<BigInt>> {
    primitive_vector(&scale_to_integers(v))
}

/// Primitive integer vector along a direction known to be nonzero.
pub fn primitive_dir(v: &[Rat]) -> Vec<BigInt> {
    primitive_from_rat(v).expect("nonzero direction")
}

/// Normalized volume of a simplex with integer vertices, with respect to the
/// lattice of its affine span: the unit simplex has volume 1.
pub fn lattice_volume(vertices: &[Vec<BigInt>]) -> Result<BigInt> {
    let rational: Vec<Vec<Rat>> = vertices
        .iter()
        .map(|v| v.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let vol = lattice_volume_rat(&rational)?;
    debug_assert!(rat_is_integer(&vol));
    Ok(vol.to_integer())
}

/// Rational-vertex variant; the volume is taken with respect to the integer
/// lattice of the direction span, so a segment of direction length 5/2 has
/// volume 5/2.
pub fn lattice_volume_rat(vertices: &[Vec<Rat>]) -> Result<Rat> {
    if vertices.is_empty() {
        return Err(Error::InvalidInput("empty vertex list".into()));
    }
    let k = vertices.len() - 1;
    if k == 0 {
        return Ok(Rat::one());
    }
    let dirs: Vec<Vec<Rat>> = vertices[1..]
        .iter()
        .map(|v| {
            v.iter()
                .zip(&vertices[0])
                .map(|(a, b)| a - b)
                .collect::<Vec<Rat>>()
        })
        .collect();
    let lambda = lcm_denominators(dirs.iter().flatten());
    let scaled: Vec<Vec<BigInt>> = dirs
        .iter()
        .map(|d| {
            d.iter()
                .map(|x| (x * Rat::from_integer(lambda.clone())).to_integer())
                .collect()
        })
        .collect();
    let m = IntegerMatrix::from_rows(scaled);
    let ext = snf_ext(&m);
    if ext.snf.rank() < k {
        return Err(Error::DegenerateSimplex);
    }
    // volume of the scaled edge matrix relative to the saturated lattice of
    // its span is the product of its elementary divisors; undo the scaling.
    let prod: BigInt = ext.snf.divisors().iter().product();
    let mut lk = BigInt::one();
    for _ in 0..k {
        lk *= &lambda;
    }
    Ok(Rat::new(prod, lk))
}

/// Coordinates on the quotient lattice `Z^n / (Z^n âˆ© span)`, where the span
/// is given by generating (integer) rows. Built from a Smith reduction: with
/// `U M V = D`, the last `n - rank` coordinates of `x V` chart the quotient.
pub struct QuotientChart {
    v: IntegerMatrix,
    rank: usize,
    ambient: usize,
}

impl QuotientChart {
    pub fn new(span_rows: &[Vec<BigInt>], ambient: usize) -> Self {
        if span_rows.is_empty() {
            return QuotientChart {
                v: IntegerMatrix::identity(ambient),
                rank: 0,
                ambient,
            };
        }
        let m = IntegerMatrix::from_rows(span_rows.to_vec());
        let ext = snf_ext(&m);
        QuotientChart {
            rank: ext.snf.rank(),
            v: ext.snf.v,
            ambient,
        }
    }

    pub fn quotient_dim(&self) -> usize {
        self.ambient - self.rank
    }

    /// Image of `u` in quotient coordinates; `None` when `u` lies in the span.
    pub fn image(&self, u: &[Rat]) -> Option<Vec<Rat>> {
        debug_assert_eq!(u.len(), self.ambient);
        let mut out = vec![Rat::zero(); self.quotient_dim()];
        for (jj, slot) in out.iter_mut().enumerate() {
            let j = self.rank + jj;
            let mut acc = Rat::zero();
            for i in 0..self.ambient {
                acc += &u[i] * Rat::from_integer(self.v.get(i, j).clone());
            }
            *slot = acc;
        }
        if out.iter().all(|x| x.is_zero()) {
            None
        } else {
            Some(out)
        }
    }

    /// Primitive lattice vector along the image ray of `u`; sign preserved.
    pub fn primitive_image(&self, u: &[Rat]) -> Option<Vec<BigInt>> {
        self.image(u).map(|w| primitive_from_rat(&w).unwrap())
    }
}

/// A nonzero lattice point of the half-open fundamental parallelepiped
/// `{sum t_i r_i : 0 <= t_i < 1}` of a simplicial ray family.
#[derive(Clone, Debug)]
pub struct ParallelepipedPoint {
    pub coeffs: Vec<Rat>,
    pub point: Vec<BigInt>,
}

impl ParallelepipedPoint {
    pub fn coeff_sum(&self) -> Rat {
        let mut s = Rat::zero();
        for c in &self.coeffs {
            s += c;
        }
        s
    }
}

/// Enumerates the nonzero lattice points of the fundamental parallelepiped of
/// linearly independent integer rays, sorted by point coordinates. The count
/// is (multiplicity - 1).
pub fn parallelepiped_points(rays: &[Vec<BigInt>]) -> Result<Vec<ParallelepipedPoint>> {
    let k = rays.len();
    let m = IntegerMatrix::from_rows(rays.to_vec());
    let ext = snf_ext(&m);
    if ext.snf.rank() < k {
        return Err(Error::NotSimplicial(
            "ray generators are linearly dependent".into(),
        ));
    }
    let divisors = ext.snf.divisors();
    let mut total = BigInt::one();
    for d in &divisors {
        total *= d;
    }
    if total.is_one() {
        return Ok(vec![]);
    }
    // enumerate coset representatives s_i in {0, 1/d_i, ..., (d_i-1)/d_i};
    // t = frac(s U) are the parallelepiped coefficients, y = t M the point.
    let radices: Vec<u64> = divisors
        .iter()
        .map(|d| u64::try_from(d).expect("multiplicity fits u64 at desk scale"))
        .collect();
    let mut counters = vec![0u64; k];
    let mut seen = std::collections::BTreeMap::new();
    loop {
        let s: Vec<Rat> = counters
            .iter()
            .zip(&divisors)
            .map(|(&c, d)| Rat::new(BigInt::from(c), d.clone()))
            .collect();
        // t = frac(s * U)
        let mut t = vec![Rat::zero(); k];
        for (j, tj) in t.iter_mut().enumerate() {
            let mut acc = Rat::zero();
            for i in 0..k {
                acc += &s[i] * Rat::from_integer(ext.snf.u.get(i, j).clone());
            }
            let fl = acc.floor();
            *tj = acc - fl;
        }
        if t.iter().any(|x| !x.is_zero()) {
            let mut y = vec![Rat::zero(); m.cols()];
            for (i, ti) in t.iter().enumerate() {
                for j in 0..m.cols() {
                    y[j] += ti * Rat::from_integer(m.get(i, j).clone());
                }
            }
            debug_assert!(y.iter().all(rat_is_integer));
            let point: Vec<BigInt> = y.iter().map(|x| x.to_integer()).collect();
            seen.entry(point.clone())
                .or_insert(ParallelepipedPoint { coeffs: t, point });
        }
        // advance mixed-radix counter
        let mut pos = 0;
        loop {
            if pos == k {
                let out: Vec<ParallelepipedPoint> = seen.into_values().collect();
                return Ok(out);
            }
            counters[pos] += 1;
            if counters[pos] < radices[pos] {
                break;
            }
            counters[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int_vec, rat, rat_int};
    use num_traits::Signed;
    use proptest::prelude::*;

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_vector(&int_vec(&[2, 4])).unwrap(), int_vec(&[1, 2]));
        assert_eq!(
            primitive_vector(&int_vec(&[-3, 6])).unwrap(),
            int_vec(&[-1, 2])
        );
        assert_eq!(primitive_vector(&int_vec(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn volume_examples() {
        // unit simplex
        let s = vec![int_vec(&[0, 0]), int_vec(&[1, 0]), int_vec(&[0, 1])];
        assert_eq!(lattice_volume(&s).unwrap(), BigInt::from(1));
        // segment (0,0)-(2,4): gcd of the direction vector
        let s = vec![int_vec(&[0, 0]), int_vec(&[2, 4])];
        assert_eq!(lattice_volume(&s).unwrap(), BigInt::from(2));
        // triangle (0,0),(1,0),(0,2): 2x2 determinant
        let s = vec![int_vec(&[0, 0]), int_vec(&[1, 0]), int_vec(&[0, 2])];
        assert_eq!(lattice_volume(&s).unwrap(), BigInt::from(2));
        // degenerate
        let s = vec![int_vec(&[0, 0]), int_vec(&[1, 1]), int_vec(&[2, 2])];
        assert_eq!(lattice_volume(&s), Err(Error::DegenerateSimplex));
    }

    #[test]
    fn rational_volume() {
        let s = vec![vec![rat_int(0)], vec![rat(5, 2)]];
        assert_eq!(lattice_volume_rat(&s).unwrap(), rat(5, 2));
    }

    #[test]
    fn parallelepiped_of_index_two_cone() {
        let rays = vec![int_vec(&[1, 0]), int_vec(&[1, 2])];
        let pts = parallelepiped_points(&rays).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].point, int_vec(&[1, 1]));
        assert_eq!(pts[0].coeff_sum(), rat_int(1));
    }

    #[test]
    fn parallelepiped_of_index_three_cone() {
        let rays = vec![int_vec(&[1, 0]), int_vec(&[1, 3])];
        let pts = parallelepiped_points(&rays).unwrap();
        let points: Vec<Vec<BigInt>> = pts.iter().map(|p| p.point.clone()).collect();
        assert_eq!(points, vec![int_vec(&[1, 1]), int_vec(&[1, 2])]);
    }

    #[test]
    fn quotient_chart_basics() {
        // span of (1,0) in Z^2: quotient is Z, image of (x,y) is ±y
        let chart = QuotientChart::new(&[int_vec(&[1, 0])], 2);
        assert_eq!(chart.quotient_dim(), 1);
        let img = chart
            .primitive_image(&[rat_int(3), rat_int(2)])
            .expect("not in span");
        assert_eq!(img.len(), 1);
        assert_eq!(img[0].clone().abs(), BigInt::from(1));
        assert!(chart.primitive_image(&[rat_int(5), rat_int(0)]).is_none());
    }

    proptest! {
        #[test]
        fn primitive_scaling_invariant(v in proptest::collection::vec(-20i64..=20, 1..4), k in 1i64..=7) {
            let v: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
            if v.iter().any(|x| !x.is_zero()) {
                let scaled: Vec<BigInt> = v.iter().map(|x| x * BigInt::from(k)).collect();
                prop_assert_eq!(primitive_vector(&v).unwrap(), primitive_vector(&scaled).unwrap());
            }
        }

        #[test]
        fn volume_invariant_under_unimodular_maps(
            coords in proptest::collection::vec(-4i64..=4, 6),
            shifts in proptest::collection::vec(-3i64..=3, 2),
            shear in -3i64..=3,
        ) {
            // triangle in Z^2, mapped by a shear (unimodular) plus a translation
            let pts: Vec<Vec<BigInt>> = coords.chunks(2).map(|c| int_vec(&[c[0], c[1]])).collect();
            let vol = lattice_volume(&pts);
            let mapped: Vec<Vec<BigInt>> = pts.iter().map(|p| {
                let x = &p[0] + BigInt::from(shear) * &p[1] + BigInt::from(shifts[0]);
                let y = p[1].clone() + BigInt::from(shifts[1]);
                vec![x, y]
            }).collect();
            let vol2 = lattice_volume(&mapped);
            prop_assert_eq!(vol, vol2);
        }

        #[test]
        fn volume_invariant_under_vertex_permutation(
            coords in proptest::collection::vec(-4i64..=4, 6),
        ) {
            let pts: Vec<Vec<BigInt>> = coords.chunks(2).map(|c| int_vec(&[c[0], c[1]])).collect();
            let mut rev = pts.clone();
            rev.reverse();
            prop_assert_eq!(lattice_volume(&pts), lattice_volume(&rev));
        }
    }
}
