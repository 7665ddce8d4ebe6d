//! Line arrangements in the rational projective plane.
//!
//! Lines and intersection points are canonicalized to coprime integer
//! triples with positive leading entry, so equality is bit-exact and
//! grouping intersection points never involves an epsilon. Rational
//! coefficients are accepted on input and canonicalized immediately.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::Rat;

/// A point of the projective plane as a canonical coprime integer triple.
pub type ProjPoint = [BigInt; 3];

/// Scale a nonzero triple to coprime integers with positive leading entry.
fn canonical_triple(mut t: [BigInt; 3]) -> Option<[BigInt; 3]> {
    if t.iter().all(Zero::is_zero) {
        return None;
    }
    let mut g = BigInt::zero();
    for x in &t {
        g = g.gcd(x);
    }
    if t.iter().find(|x| !x.is_zero()).unwrap().is_negative() {
        g = -g;
    }
    for x in &mut t {
        *x = &*x / &g;
    }
    Some(t)
}

/// A line {ax + by + cz = 0} in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectiveLine {
    coeffs: [BigInt; 3],
}

impl ProjectiveLine {
    /// Build a line from rational coefficients, canonicalizing immediately.
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self> {
        let lcm = [&a, &b, &c]
            .iter()
            .fold(BigInt::from(1), |l, x| l.lcm(x.denom()));
        let ints = [a, b, c].map(|x| x.numer() * (&lcm / x.denom()));
        let coeffs = canonical_triple(ints).ok_or(Error::ZeroLine { index: 0 })?;
        Ok(Self { coeffs })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        let ints = [BigInt::from(a), BigInt::from(b), BigInt::from(c)];
        let coeffs = canonical_triple(ints).ok_or(Error::ZeroLine { index: 0 })?;
        Ok(Self { coeffs })
    }

    /// Canonical coefficients: coprime integers, positive leading entry.
    pub fn coeffs(&self) -> &[BigInt; 3] {
        &self.coeffs
    }

    pub fn eval(&self, p: &ProjPoint) -> BigInt {
        &self.coeffs[0] * &p[0] + &self.coeffs[1] * &p[1] + &self.coeffs[2] * &p[2]
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }
}

/// Intersection point of two distinct lines (cross product of coefficient
/// vectors), canonicalized. Symmetric in its arguments bit-for-bit.
pub fn intersect(l1: &ProjectiveLine, l2: &ProjectiveLine) -> Result<ProjPoint> {
    let a = &l1.coeffs;
    let b = &l2.coeffs;
    let cross = [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ];
    canonical_triple(cross).ok_or(Error::IdenticalLines)
}

/// A point where at least two lines of an arrangement meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub point: ProjPoint,
    /// Number of lines through the point (always >= 2).
    pub multiplicity: usize,
    /// Sorted indices of the incident lines.
    pub incident: Vec<usize>,
}

/// The numbers t_r of r-fold intersection points of an arrangement of d
/// lines, or a synthetic profile fed to the combinatorial bound checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    d: usize,
    t: BTreeMap<usize, usize>,
}

impl MultiplicityProfile {
    /// Build a profile from explicit counts. Counts must have r >= 2 and
    /// r <= d; zero counts are dropped. The pair-count identity is *not*
    /// enforced here, so unrealizable profiles can be fed to the checks.
    pub fn from_counts(d: usize, counts: &[(usize, usize)]) -> Result<Self> {
        let mut t = BTreeMap::new();
        for &(r, count) in counts {
            if count == 0 {
                continue;
            }
            if r < 2 || r > d {
                return Err(Error::Precondition(format!(
                    "multiplicity {r} is outside 2..={d}"
                )));
            }
            *t.entry(r).or_insert(0) += count;
        }
        Ok(Self { d, t })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// t_r, zero for any multiplicity not present.
    pub fn t(&self, r: usize) -> usize {
        self.t.get(&r).copied().unwrap_or(0)
    }

    /// Nonzero counts, keyed by multiplicity.
    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.t
    }

    /// Largest multiplicity with a nonzero count (None when d < 2).
    pub fn max_multiplicity(&self) -> Option<usize> {
        self.t.keys().next_back().copied()
    }

    /// Sum of f(r) * t_r over all nonzero counts.
    pub fn weighted_sum<F: Fn(usize) -> usize>(&self, f: F) -> usize {
        self.t.iter().map(|(&r, &count)| f(r) * count).sum()
    }

    /// sum_r C(r,2) t_r = C(d,2): every pair of lines meets in exactly one
    /// singular point.
    pub fn pair_identity_holds(&self) -> bool {
        self.weighted_sum(|r| r * (r - 1) / 2) == self.d * (self.d - 1) / 2
    }

    /// Combinatorial total Tjurina number sum_r (r-1)^2 t_r: every singular
    /// point of a line arrangement is an ordinary r-fold point.
    pub fn tau_combinatorial(&self) -> usize {
        self.weighted_sum(|r| (r - 1) * (r - 1))
    }
}

/// A finite set of pairwise-distinct projective lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    lines: Vec<ProjectiveLine>,
}

impl Arrangement {
    /// Requires at least one line and pairwise-distinct canonical forms.
    pub fn new(lines: Vec<ProjectiveLine>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::Precondition(
                "an arrangement needs at least one line".into(),
            ));
        }
        let mut seen: BTreeMap<&ProjectiveLine, usize> = BTreeMap::new();
        for (i, line) in lines.iter().enumerate() {
            if let Some(&first) = seen.get(line) {
                return Err(Error::DuplicateLine { first, second: i });
            }
            seen.insert(line, i);
        }
        Ok(Self { lines })
    }

    pub fn from_int_coeffs(coeffs: &[[i64; 3]]) -> Result<Self> {
        let lines = coeffs
            .iter()
            .map(|&[a, b, c]| ProjectiveLine::from_ints(a, b, c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(lines)
    }

    pub fn lines(&self) -> &[ProjectiveLine] {
        &self.lines
    }

    pub fn d(&self) -> usize {
        self.lines.len()
    }

    /// All singular points, sorted by canonical point coordinates. Every
    /// unordered pair of lines is accounted for in exactly one point.
    pub fn singular_points(&self) -> Vec<SingularPoint> {
        let mut groups: BTreeMap<ProjPoint, BTreeSet<usize>> = BTreeMap::new();
        for i in 0..self.lines.len() {
            for j in i + 1..self.lines.len() {
                let p = intersect(&self.lines[i], &self.lines[j])
                    .expect("arrangement lines are pairwise distinct");
                let set = groups.entry(p).or_default();
                set.insert(i);
                set.insert(j);
            }
        }
        groups
            .into_iter()
            .map(|(point, incident)| SingularPoint {
                point,
                multiplicity: incident.len(),
                incident: incident.into_iter().collect(),
            })
            .collect()
    }

    /// Multiplicity profile (d, t_2, t_3, ...).
    pub fn profile(&self) -> MultiplicityProfile {
        let mut t = BTreeMap::new();
        for p in self.singular_points() {
            *t.entry(p.multiplicity).or_insert(0) += 1;
        }
        let profile = MultiplicityProfile { d: self.d(), t };
        debug_assert!(self.d() < 2 || profile.pair_identity_holds());
        profile
    }

    /// Counts of r-fold points on one line; satisfies
    /// sum_r (r-1) t_{r,line} = d - 1.
    pub fn per_line_profile(&self, index: usize) -> Result<BTreeMap<usize, usize>> {
        if index >= self.lines.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.lines.len(),
            });
        }
        let mut counts = BTreeMap::new();
        for p in self.singular_points() {
            if p.incident.binary_search(&index).is_ok() {
                *counts.entry(p.multiplicity).or_insert(0) += 1;
            }
        }
        Ok(counts)
    }
}

/// Generate d pairwise-distinct lines with integer coefficients in
/// [-coeff_bound, coeff_bound], deterministically for a fixed seed.
/// Coincident triple points are not rejected; degenerate profiles are
/// valid inputs everywhere in the crate.
pub fn random_arrangement(d: usize, seed: u64, coeff_bound: i64) -> Result<Arrangement> {
    if d == 0 || coeff_bound < 1 {
        return Err(Error::Precondition(
            "random_arrangement needs d >= 1 and coeff_bound >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines: Vec<ProjectiveLine> = Vec::with_capacity(d);
    let mut rejections = 0usize;
    while lines.len() < d {
        let triple = [
            rng.gen_range(-coeff_bound..=coeff_bound),
            rng.gen_range(-coeff_bound..=coeff_bound),
            rng.gen_range(-coeff_bound..=coeff_bound),
        ];
        let candidate = match ProjectiveLine::from_ints(triple[0], triple[1], triple[2]) {
            Ok(line) => line,
            Err(_) => {
                rejections += 1;
                if rejections > 10_000 {
                    return Err(Error::CannotGenerate {
                        d,
                        bound: coeff_bound,
                    });
                }
                continue;
            }
        };
        if lines.contains(&candidate) {
            rejections += 1;
            if rejections > 10_000 {
                return Err(Error::CannotGenerate {
                    d,
                    bound: coeff_bound,
                });
            }
            continue;
        }
        lines.push(candidate);
    }
    Arrangement::new(lines)
}

/// The triangle {x, y, z}: the smallest free arrangement.
pub fn triangle() -> Arrangement {
    Arrangement::from_int_coeffs(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
}

/// The complete quadrilateral {x, y, z, x-y, x-z, y-z}.
pub fn complete_quadrilateral() -> Arrangement {
    Arrangement::from_int_coeffs(&[
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, -1, 0],
        [1, 0, -1],
        [0, 1, -1],
    ])
    .unwrap()
}

/// Four lines in general position (no point of multiplicity above two).
pub fn generic_four_lines() -> Arrangement {
    Arrangement::from_int_coeffs(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]).unwrap()
}

/// d distinct lines through [0:0:1]: the pencil {y} + {x + i y}.
pub fn pencil(d: usize) -> Result<Arrangement> {
    let lines = (0..d)
        .map(|i| {
            if i == 0 {
                ProjectiveLine::from_ints(0, 1, 0)
            } else {
                ProjectiveLine::from_ints(1, i as i64 - 1, 0)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Arrangement::new(lines)
}

/// d-1 lines through a common point plus one line missing it.
pub fn near_pencil(d: usize) -> Result<Arrangement> {
    if d < 3 {
        return Err(Error::Precondition("near_pencil needs d >= 3".into()));
    }
    let mut lines = vec![ProjectiveLine::from_ints(1, 0, 0)?];
    for i in 1..d - 1 {
        lines.push(ProjectiveLine::from_ints(1, i as i64, 0)?);
    }
    lines.push(ProjectiveLine::from_ints(0, 0, 1)?);
    Arrangement::new(lines)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point(a: i64, b: i64, c: i64) -> ProjPoint {
        [BigInt::from(a), BigInt::from(b), BigInt::from(c)]
    }

    #[test]
    fn lines_canonicalize() {
        let l1 = ProjectiveLine::from_ints(-2, 4, -6).unwrap();
        let l2 = ProjectiveLine::from_ints(1, -2, 3).unwrap();
        assert_eq!(l1, l2);
        assert_eq!(l1.coeffs(), &point(1, -2, 3));
        let l3 = ProjectiveLine::new(
            crate::rational::ratio(1, 2),
            crate::rational::rat(-1),
            crate::rational::ratio(3, 2),
        )
        .unwrap();
        assert_eq!(l3, l2);
        assert!(ProjectiveLine::from_ints(0, 0, 0).is_err());
    }

    #[test]
    fn intersection_examples() {
        let x = ProjectiveLine::from_ints(1, 0, 0).unwrap();
        let y = ProjectiveLine::from_ints(0, 1, 0).unwrap();
        let x_minus_y = ProjectiveLine::from_ints(1, -1, 0).unwrap();
        let x_minus_z = ProjectiveLine::from_ints(1, 0, -1).unwrap();

        assert_eq!(intersect(&x, &y).unwrap(), point(0, 0, 1));
        assert_eq!(intersect(&x, &x_minus_y).unwrap(), point(0, 0, 1));
        let p = intersect(&x_minus_y, &x_minus_z).unwrap();
        assert_eq!(p, point(1, 1, 1));
        // Both equations vanish at the returned point.
        assert!(x_minus_y.contains(&p));
        assert!(x_minus_z.contains(&p));
    }

    #[test]
    fn intersection_is_symmetric_and_rejects_equal_lines() {
        let a = ProjectiveLine::from_ints(2, 3, -1).unwrap();
        let b = ProjectiveLine::from_ints(-1, 4, 5).unwrap();
        assert_eq!(intersect(&a, &b).unwrap(), intersect(&b, &a).unwrap());
        assert!(matches!(intersect(&a, &a), Err(Error::IdenticalLines)));
    }

    #[test]
    fn duplicate_lines_rejected_with_both_indices() {
        let lines = vec![
            ProjectiveLine::from_ints(1, 0, 0).unwrap(),
            ProjectiveLine::from_ints(0, 1, 0).unwrap(),
            ProjectiveLine::from_ints(-1, 0, 0).unwrap(),
        ];
        match Arrangement::new(lines) {
            Err(Error::DuplicateLine { first, second }) => {
                assert_eq!((first, second), (0, 2));
            }
            other => panic!("expected duplicate-line error, got {other:?}"),
        }
    }

    #[test]
    fn triangle_profile() {
        let a = triangle();
        let points = a.singular_points();
        assert_eq!(points.len(), 3);
        assert!(points.iter().all(|p| p.multiplicity == 2));
        let profile = a.profile();
        assert_eq!(profile.d(), 3);
        assert_eq!(profile.t(2), 3);
        assert_eq!(profile.tau_combinatorial(), 3);
    }

    #[test]
    fn pencil_profile() {
        let a = pencil(4).unwrap();
        let points = a.singular_points();
        assert_eq!(points.len(), 1);
        assert_eq!(points[0].multiplicity, 4);
        assert_eq!(points[0].point, point(0, 0, 1));
        assert_eq!(a.profile().t(4), 1);
    }

    #[test]
    fn quadrilateral_profile_and_points() {
        let a = complete_quadrilateral();
        let points = a.singular_points();
        let triples: Vec<_> = points.iter().filter(|p| p.multiplicity == 3).collect();
        let doubles: Vec<_> = points.iter().filter(|p| p.multiplicity == 2).collect();
        assert_eq!(triples.len(), 4);
        assert_eq!(doubles.len(), 3);
        let triple_points: BTreeSet<_> = triples.iter().map(|p| p.point.clone()).collect();
        let expected: BTreeSet<_> = [
            point(0, 0, 1),
            point(0, 1, 0),
            point(1, 0, 0),
            point(1, 1, 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(triple_points, expected);
        let double_points: BTreeSet<_> = doubles.iter().map(|p| p.point.clone()).collect();
        let expected: BTreeSet<_> = [point(0, 1, 1), point(1, 0, 1), point(1, 1, 0)]
            .into_iter()
            .collect();
        assert_eq!(double_points, expected);

        let profile = a.profile();
        assert_eq!((profile.t(2), profile.t(3)), (3, 4));
        // 3*1 + 4*3 = 15 = C(6,2)
        assert!(profile.pair_identity_holds());
        assert_eq!(profile.tau_combinatorial(), 19);
    }

    #[test]
    fn generic_four_lines_profile() {
        let profile = generic_four_lines().profile();
        assert_eq!(profile.t(2), 6);
        assert_eq!(profile.max_multiplicity(), Some(2));
        assert_eq!(profile.tau_combinatorial(), 6);
    }

    #[test]
    fn per_line_profiles() {
        let a = triangle();
        let counts = a.per_line_profile(0).unwrap();
        assert_eq!(counts, BTreeMap::from([(2, 2)]));

        let q = complete_quadrilateral();
        let counts = q.per_line_profile(0).unwrap();
        assert_eq!(counts, BTreeMap::from([(3, 2), (2, 1)]));

        let p = pencil(5).unwrap();
        for i in 0..5 {
            assert_eq!(p.per_line_profile(i).unwrap(), BTreeMap::from([(5, 1)]));
        }

        assert!(matches!(
            a.per_line_profile(3),
            Err(Error::IndexOutOfRange { index: 3, len: 3 })
        ));
    }

    #[test]
    fn per_line_identity_holds_on_random_arrangements() {
        for seed in 0..20 {
            let a = random_arrangement(6, seed, 4).unwrap();
            let d = a.d();
            for i in 0..d {
                let counts = a.per_line_profile(i).unwrap();
                let sum: usize = counts.iter().map(|(&r, &t)| (r - 1) * t).sum();
                assert_eq!(sum, d - 1, "seed {seed}, line {i}");
            }
        }
    }

    #[test]
    fn incidence_double_count_on_random_arrangements() {
        for seed in 0..20 {
            let a = random_arrangement(7, seed, 3).unwrap();
            let profile = a.profile();
            assert!(profile.pair_identity_holds(), "seed {seed}");
            let mut incident_totals: BTreeMap<usize, usize> = BTreeMap::new();
            for i in 0..a.d() {
                for (&r, &t) in &a.per_line_profile(i).unwrap() {
                    *incident_totals.entry(r).or_insert(0) += t;
                }
            }
            // sum over lines of t_{r,line} = r * t_r for each r.
            for (&r, &total) in &incident_totals {
                assert_eq!(total, r * profile.t(r), "seed {seed}, r {r}");
            }
        }
    }

    #[test]
    fn random_arrangement_is_deterministic() {
        let a = random_arrangement(5, 42, 3).unwrap();
        let b = random_arrangement(5, 42, 3).unwrap();
        assert_eq!(a, b);
        let c = random_arrangement(5, 43, 3).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_arrangement_single_line_and_failure() {
        assert_eq!(random_arrangement(1, 0, 1).unwrap().d(), 1);
        // 13 projective lines exist with coefficients in {-1,0,1}; asking for
        // far more must fail rather than loop forever.
        assert!(matches!(
            random_arrangement(50, 0, 1),
            Err(Error::CannotGenerate { .. })
        ));
    }

    #[test]
    fn synthetic_profile_validation() {
        assert!(MultiplicityProfile::from_counts(5, &[(2, 4), (4, 1)]).is_ok());
        assert!(MultiplicityProfile::from_counts(5, &[(6, 1)]).is_err());
        assert!(MultiplicityProfile::from_counts(5, &[(1, 1)]).is_err());
        // Unrealizable profiles are representable on purpose.
        let bad = MultiplicityProfile::from_counts(8, &[(5, 3), (2, 2)]).unwrap();
        assert!(!bad.pair_identity_holds());
    }
}
