//! Combinatorial inequalities and boundedness certificates for real line
//! arrangements.
//!
//! Every check evaluates both sides of its inequality in exact rational
//! arithmetic and reports them verbatim; `holds` is never decided by an
//! approximate comparison, and square-root comparisons are replaced by
//! integer-squared equivalents so the boundary integers are decided exactly.
//! Checks whose stated hypotheses fail report `preconditions_met = false`
//! instead of erroring, so batch pipelines never abort on out-of-scope
//! profiles.

use num_integer::Roots;

use crate::arrangement::MultiplicityProfile;
use crate::error::{Error, Result};
use crate::rational::{rat, ratio, Rat};

/// Outcome of one inequality check: both sides, exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub name: String,
    /// Whether the inequality holds; meaningful only when
    /// `preconditions_met` is true.
    pub holds: bool,
    pub lhs: Rat,
    pub rhs: Rat,
    pub preconditions_met: bool,
}

impl BoundReport {
    fn new(name: &str, pre: bool, holds: bool, lhs: Rat, rhs: Rat) -> Self {
        Self {
            name: name.to_string(),
            holds,
            lhs,
            rhs,
            preconditions_met: pre,
        }
    }

    /// A failed check is one whose hypotheses held but whose inequality did
    /// not.
    pub fn failed(&self) -> bool {
        self.preconditions_met && !self.holds
    }
}

/// Melchior: t_2 >= 3 + sum_{r=4}^{d-1} (r-3) t_r for real arrangements of
/// d >= 3 lines that are not a pencil (t_d = 0).
pub fn melchior_check(p: &MultiplicityProfile) -> BoundReport {
    let d = p.d();
    let pre = d >= 3 && p.t(d) == 0;
    let lhs = rat(p.t(2));
    let rhs = rat(3 + p
        .counts()
        .iter()
        .filter(|&(&r, _)| r >= 4 && r <= d.saturating_sub(1))
        .map(|(&r, &t)| (r - 3) * t)
        .sum::<usize>());
    let holds = lhs >= rhs;
    BoundReport::new("melchior", pre, holds, lhs, rhs)
}

/// Shnurnikov: t_2 + (3/2) t_3 >= 8 + sum_{r>=4} (4r-15)/2 t_r for real
/// arrangements with t_d = t_{d-1} = t_{d-2} = 0.
pub fn shnurnikov_check(p: &MultiplicityProfile) -> BoundReport {
    let d = p.d();
    let pre = d >= 3 && p.t(d) == 0 && p.t(d - 1) == 0 && p.t(d - 2) == 0;
    let lhs = rat(p.t(2)) + ratio(3, 2) * rat(p.t(3));
    let mut rhs = rat(8);
    for (&r, &t) in p.counts() {
        if r >= 4 {
            rhs += ratio(4 * r as i64 - 15, 2) * rat(t);
        }
    }
    let holds = lhs >= rhs;
    BoundReport::new("shnurnikov", pre, holds, lhs, rhs)
}

/// Global bound t_k <= (d(d-1) - 16) / (k^2 + 3k - 15), valid when all
/// multiplicities are at most k, k >= 4 and d >= k + 3 (it is derived from
/// Shnurnikov's inequality).
pub fn tk_bound_global(d: usize, k: usize) -> Result<Rat> {
    if k < 4 || d < k + 3 {
        return Err(Error::Precondition(format!(
            "global t_k bound needs k >= 4 and d >= k + 3 (got d = {d}, k = {k})"
        )));
    }
    Ok(ratio(
        (d * (d - 1) - 16) as i64,
        (k * k + 3 * k - 15) as i64,
    ))
}

/// Per-line incidence bound t_k <= (d/k) * floor((d-1)/(k-1)): each k-fold
/// point on a line uses up k - 1 of its d - 1 intersections.
pub fn tk_bound_per_line(d: usize, k: usize) -> Result<Rat> {
    if k < 2 || d < 2 {
        return Err(Error::Precondition(format!(
            "per-line t_k bound needs k >= 2 and d >= 2 (got d = {d}, k = {k})"
        )));
    }
    Ok(ratio(d as i64, k as i64) * rat(((d - 1) / (k - 1)) as i64))
}

/// Combined bound: max of the per-line bound and the floor of the global
/// bound; the global term only applies once d >= k + 3.
pub fn tk_bound(d: usize, k: usize) -> Result<Rat> {
    if k < 4 || d < 2 {
        return Err(Error::Precondition(format!(
            "combined t_k bound needs k >= 4 and d >= 2 (got d = {d}, k = {k})"
        )));
    }
    let per_line = tk_bound_per_line(d, k)?;
    if d >= k + 3 {
        let global_floor = rat(tk_bound_global(d, k)?.floor().to_integer());
        Ok(per_line.max(global_floor))
    } else {
        Ok(per_line)
    }
}

/// Discriminant of the exponent quadratic
/// x^2 - (d-1) x + (sum_r (r-1) t_r - d + 1), namely
/// (d-1)^2 + 4(d-1) - 4 sum_r (r-1) t_r. Freeness forces it to be
/// nonnegative and a perfect square.
pub fn exponent_discriminant(p: &MultiplicityProfile) -> Rat {
    rat(discriminant_int(p))
}

fn discriminant_int(p: &MultiplicityProfile) -> i128 {
    let d = p.d() as i128;
    let weighted = p.weighted_sum(|r| r - 1) as i128;
    (d - 1) * (d - 1) + 4 * (d - 1) - 4 * weighted
}

/// Smallest nonnegative integer root of the exponent quadratic, if the
/// discriminant is a perfect square and the root is integral. Absence means
/// the profile cannot belong to a free arrangement.
pub fn free_exponent_root(p: &MultiplicityProfile) -> Option<usize> {
    let disc = discriminant_int(p);
    if disc < 0 {
        return None;
    }
    let s = disc.sqrt();
    if s * s != disc {
        return None;
    }
    let d1 = p.d() as i128 - 1;
    // The two roots ((d-1) -/+ s) / 2 share parity; take the smaller
    // nonnegative one.
    if (d1 - s).rem_euclid(2) != 0 {
        return None;
    }
    let root = if d1 >= s { (d1 - s) / 2 } else { (d1 + s) / 2 };
    (root >= 0).then(|| root as usize)
}

/// For free arrangements with multiplicity at most 5 the nonnegative
/// discriminant forces (3/2)(d-1) + 2 t_5 >= t_2 + t_3.
pub fn free_t23_check(p: &MultiplicityProfile) -> BoundReport {
    let d = p.d();
    let pre = p.max_multiplicity().is_none_or(|m| m <= 5);
    let lhs = ratio(3, 2) * rat(d as i64 - 1) + rat(2 * p.t(5));
    let rhs = rat(p.t(2) + p.t(3));
    let holds = lhs >= rhs;
    BoundReport::new("t23_from_discriminant", pre, holds, lhs, rhs)
}

/// The same discriminant gives (d^2 + 2d - 3)/4 >= t_2 + 2t_3 + 3t_4 + 4t_5.
pub fn free_weighted_check(p: &MultiplicityProfile) -> BoundReport {
    let d = p.d() as i64;
    let pre = p.max_multiplicity().is_none_or(|m| m <= 5);
    let lhs = ratio(d * d + 2 * d - 3, 4);
    let rhs = rat(p.weighted_sum(|r| r - 1));
    let holds = lhs >= rhs;
    BoundReport::new("weighted_from_discriminant", pre, holds, lhs, rhs)
}

/// Lower bound t_5 >= (d-3)(d-19)/24 for free arrangements of d >= 8 lines
/// with multiplicity at most 5. May be negative for d < 19; callers using it
/// as a count clamp at zero.
pub fn free_t5_floor(d: usize) -> Result<Rat> {
    if d < 8 {
        return Err(Error::Precondition(format!(
            "the t_5 floor needs d >= 8 (got {d})"
        )));
    }
    let d = d as i64;
    Ok(ratio((d - 3) * (d - 19), 24))
}

/// Exact integer sides of the closed-form feasibility test at a given d:
/// 25 (d-3)(d-19) <= 24 (d(d-1) - 16), the requirement that the t_5 floor
/// does not exceed the t_5 ceiling.
pub fn free_boundary(d: usize) -> (i64, i64) {
    let d = d as i64;
    (25 * (d - 3) * (d - 19), 24 * (d * (d - 1) - 16))
}

/// Whether the free-arrangement envelope is feasible at d in the closed-form
/// sense (real interval nonempty; integrality of t_5 is not required here).
pub fn free_closed_form_feasible(d: usize) -> bool {
    let (lhs, rhs) = free_boundary(d);
    lhs <= rhs
}

/// Largest d for which the t_5 floor stays below the t_5 ceiling; the
/// headline bound for free arrangements with multiplicity at most 5.
pub fn free_line_count_bound() -> usize {
    largest_feasible(8, 263, free_closed_form_feasible)
}

/// For plus-one generated arrangements with multiplicity at most 4:
/// t_2 + t_3 <= 3(d-1)/2 + 2h.
pub fn pog_t23_check(p: &MultiplicityProfile, h: usize) -> BoundReport {
    let d = p.d();
    let pre = h >= 1 && p.max_multiplicity().is_none_or(|m| m <= 4);
    let lhs = rat(p.t(2) + p.t(3));
    let rhs = ratio(3 * (d as i64 - 1), 2) + rat(2 * h);
    let holds = lhs <= rhs;
    BoundReport::new("pog_t23", pre, holds, lhs, rhs)
}

/// Largest d with d^2 - 22d + 57 - 28h <= 0, by exact integer scan.
pub fn pog_d_bound_from_h(h: usize) -> usize {
    let h = h as i64;
    largest_feasible(1, 11, move |d| {
        let d = d as i64;
        d * d - 22 * d + 57 - 28 * h <= 0
    })
}

/// Smallest h >= 1 with d^2 - 22d + 57 <= 28h.
pub fn pog_minimal_h(d: usize) -> usize {
    let q = {
        let d = d as i64;
        d * d - 22 * d + 57
    };
    if q <= 28 {
        1
    } else {
        ((q + 27) / 28) as usize
    }
}

/// Exact integer sides of the boundary test (d-11)^2 <= 4(2 + 7d) used for
/// the plus-one generated bound once h <= d - 2 is substituted.
pub fn pog_boundary(d: usize) -> (i64, i64) {
    let d = d as i64;
    ((d - 11) * (d - 11), 4 * (2 + 7 * d))
}

/// Largest d with d <= 11 or (d-11)^2 <= 4(2 + 7d); the headline bound for
/// plus-one generated arrangements with multiplicity at most 4.
pub fn pog_line_count_bound() -> usize {
    largest_feasible(3, 25, |d| {
        let (lhs, rhs) = pog_boundary(d);
        d <= 11 || lhs <= rhs
    })
}

/// Scan upward from `start`, returning the last d satisfying the predicate.
/// `vertex` is a point after which the quadratic predicate is monotone
/// decreasing, so the scan can stop at the first failure beyond it.
fn largest_feasible(start: usize, vertex: usize, feasible: impl Fn(usize) -> bool) -> usize {
    let mut last = None;
    let mut d = start;
    loop {
        if feasible(d) {
            last = Some(d);
        } else if d > vertex {
            break;
        }
        d += 1;
    }
    last.expect("predicate holds nowhere in the scanned range")
}

/// Trace of the inequality chain that produces the t_5 floor for free
/// arrangements: pair count, the two discriminant bounds, Melchior, and the
/// resulting floor, each with exact sides so a failing link is pinpointed.
#[derive(Clone, Debug)]
pub struct ChainTrace {
    pub preconditions_met: bool,
    pub links: Vec<BoundReport>,
}

pub fn free_chain_trace(p: &MultiplicityProfile) -> ChainTrace {
    let d = p.d();
    let pre = d >= 8 && p.max_multiplicity().is_none_or(|m| m <= 5);

    let mut links = Vec::new();

    // d(d-1)/2 = (t_2 + 2t_3 + 3t_4 + 4t_5) + t_3 + 3(t_4 + 2t_5)
    let lhs = ratio((d * (d - 1)) as i64, 2);
    let rhs = rat(p.weighted_sum(|r| r - 1) + p.t(3) + 3 * (p.t(4) + 2 * p.t(5)));
    links.push(BoundReport::new("pair_count", pre, lhs == rhs, lhs, rhs));

    let mut weighted = free_weighted_check(p);
    weighted.preconditions_met = pre;
    links.push(weighted);

    // Melchior specialized to multiplicity <= 5: t_2 >= 3 + t_4 + 2 t_5.
    let lhs = rat(p.t(2));
    let rhs = rat(3 + p.t(4) + 2 * p.t(5));
    links.push(BoundReport::new("melchior", pre, lhs >= rhs, lhs, rhs));

    let mut t23 = free_t23_check(p);
    t23.preconditions_met = pre;
    links.push(t23);

    let lhs = rat(p.t(5));
    let rhs = if d >= 8 {
        free_t5_floor(d).expect("d >= 8 checked above")
    } else {
        rat(0)
    };
    links.push(BoundReport::new("t5_floor", pre, lhs >= rhs, lhs, rhs));

    ChainTrace {
        preconditions_met: pre,
        links,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{
        complete_quadrilateral, generic_four_lines, near_pencil, triangle, MultiplicityProfile,
    };

    fn profile(d: usize, counts: &[(usize, usize)]) -> MultiplicityProfile {
        MultiplicityProfile::from_counts(d, counts).unwrap()
    }

    #[test]
    fn melchior_examples() {
        let r = melchior_check(&triangle().profile());
        assert!(r.preconditions_met && r.holds);
        assert_eq!((r.lhs, r.rhs), (rat(3), rat(3)));

        let r = melchior_check(&complete_quadrilateral().profile());
        assert!(r.holds);
        assert_eq!((r.lhs, r.rhs), (rat(3), rat(3)));

        // Near-pencil of 5 lines: t_4 = 1, t_2 = 4; equality again.
        let r = melchior_check(&near_pencil(5).unwrap().profile());
        assert!(r.preconditions_met && r.holds);
        assert_eq!((r.lhs, r.rhs), (rat(4), rat(4)));

        // Pencils fail the hypothesis t_d = 0.
        let r = melchior_check(&profile(4, &[(4, 1)]));
        assert!(!r.preconditions_met);
    }

    #[test]
    fn shnurnikov_examples() {
        let r = shnurnikov_check(&complete_quadrilateral().profile());
        assert!(r.preconditions_met && r.holds);
        assert_eq!((r.lhs, r.rhs), (rat(9), rat(8)));

        // Generic six lines: t_2 = 15.
        let r = shnurnikov_check(&profile(6, &[(2, 15)]));
        assert!(r.preconditions_met && r.holds);

        // Combinatorially unrealizable over the reals: 2 < 8 + 15/2.
        let r = shnurnikov_check(&profile(8, &[(5, 3), (2, 2)]));
        assert!(r.preconditions_met);
        assert!(!r.holds);
        assert_eq!(r.lhs, rat(2));
        assert_eq!(r.rhs, ratio(31, 2));
    }

    #[test]
    fn tk_bound_examples() {
        assert_eq!(tk_bound_global(10, 5).unwrap(), ratio(74, 25));
        assert_eq!(tk_bound_global(8, 5).unwrap(), ratio(8, 5));
        assert_eq!(tk_bound_global(7, 4).unwrap(), rat(2));
        assert!(tk_bound_global(7, 5).is_err());

        assert_eq!(tk_bound_per_line(6, 5).unwrap(), ratio(6, 5));
        assert_eq!(tk_bound_per_line(9, 4).unwrap(), ratio(9, 2));
        assert_eq!(tk_bound_per_line(5, 5).unwrap(), rat(1));

        assert_eq!(tk_bound(10, 5).unwrap(), rat(4));
        assert_eq!(tk_bound(6, 5).unwrap(), ratio(6, 5));
        assert_eq!(tk_bound(100, 5).unwrap(), rat(480));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(exponent_discriminant(&triangle().profile()), rat(0));
        assert_eq!(
            exponent_discriminant(&complete_quadrilateral().profile()),
            rat(1)
        );
        assert_eq!(
            exponent_discriminant(&generic_four_lines().profile()),
            rat(-3)
        );
    }

    #[test]
    fn free_exponent_root_examples() {
        assert_eq!(free_exponent_root(&triangle().profile()), Some(1));
        assert_eq!(
            free_exponent_root(&complete_quadrilateral().profile()),
            Some(2)
        );
        assert_eq!(free_exponent_root(&generic_four_lines().profile()), None);
        // Pencil of 4: discriminant (d-1)^2, root 0.
        assert_eq!(free_exponent_root(&profile(4, &[(4, 1)])), Some(0));
    }

    #[test]
    fn discriminant_bound_checks() {
        let r = free_t23_check(&triangle().profile());
        assert!(r.holds);
        assert_eq!((r.lhs, r.rhs), (rat(3), rat(3)));
        let r = free_t23_check(&complete_quadrilateral().profile());
        assert!(r.holds);
        assert_eq!((r.lhs, r.rhs), (ratio(15, 2), rat(7)));
        let r = free_t23_check(&generic_four_lines().profile());
        assert!(!r.holds);
        assert_eq!((r.lhs, r.rhs), (ratio(9, 2), rat(6)));

        let r = free_weighted_check(&triangle().profile());
        assert!(r.holds);
        assert_eq!((r.lhs, r.rhs), (rat(3), rat(3)));
        let r = free_weighted_check(&complete_quadrilateral().profile());
        assert!(r.holds);
        assert_eq!((r.lhs, r.rhs), (ratio(45, 4), rat(11)));
        let r = free_weighted_check(&generic_four_lines().profile());
        assert!(!r.holds);
        assert_eq!((r.lhs, r.rhs), (ratio(21, 4), rat(6)));
    }

    #[test]
    fn t5_floor_examples() {
        assert_eq!(free_t5_floor(19).unwrap(), rat(0));
        assert_eq!(free_t5_floor(27).unwrap(), rat(8));
        assert_eq!(free_t5_floor(522).unwrap(), ratio(261057, 24));
        assert!(free_t5_floor(7).is_err());
        // Negative below 19; preserved, not clamped.
        assert_eq!(free_t5_floor(8).unwrap(), ratio(-55, 24));
    }

    #[test]
    fn free_bound_is_522_with_exact_boundary() {
        assert_eq!(free_line_count_bound(), 522);
        assert_eq!(free_boundary(522), (6526425, 6526704));
        assert!(free_closed_form_feasible(522));
        // 25*520*504 = 6552000 > 24*(523*522 - 16) = 24*272990 = 6551760.
        assert_eq!(free_boundary(523), (6552000, 6551760));
        assert!(!free_closed_form_feasible(523));
    }

    #[test]
    fn pog_bound_is_47_with_exact_boundary() {
        assert_eq!(pog_line_count_bound(), 47);
        assert_eq!(pog_boundary(47), (1296, 1324));
        assert_eq!(pog_boundary(48), (1369, 1352));
    }

    #[test]
    fn pog_t23_examples() {
        let r = pog_t23_check(&generic_four_lines().profile(), 1);
        assert!(r.preconditions_met && r.holds);
        assert_eq!((r.lhs, r.rhs), (rat(6), ratio(13, 2)));

        let r = pog_t23_check(&profile(5, &[(2, 10)]), 1);
        assert!(!r.holds);
        assert_eq!((r.lhs, r.rhs), (rat(10), rat(8)));

        let r = pog_t23_check(&profile(3, &[(2, 3)]), 1);
        assert!(r.holds);
    }

    #[test]
    fn pog_h_bounds_by_integer_scan() {
        // Independent oracle: exhaustive scan of the quadratic.
        let scan = |h: i64| {
            (1..2000)
                .filter(|&d| d * d - 22 * d + 57 - 28 * h <= 0)
                .max()
                .unwrap() as usize
        };
        assert_eq!(pog_d_bound_from_h(1), 20);
        assert_eq!(scan(1), 20);
        assert_eq!(pog_d_bound_from_h(2), 21);
        assert_eq!(scan(2), 21);
        assert_eq!(pog_d_bound_from_h(10), scan(10));
        for h in 1..40 {
            assert_eq!(pog_d_bound_from_h(h), scan(h as i64), "h = {h}");
        }
    }

    #[test]
    fn pog_minimal_h_examples() {
        assert_eq!(pog_minimal_h(4), 1);
        assert_eq!(pog_minimal_h(47), 44);
        assert_eq!(pog_minimal_h(48), 47);
    }

    #[test]
    fn chain_trace_on_free_profiles() {
        // Near-pencil of 8 lines has a 7-fold point, outside multiplicity 5;
        // use a synthetic profile of a free-looking shape instead: the
        // quadrilateral fails only the d >= 8 hypothesis.
        let trace = free_chain_trace(&complete_quadrilateral().profile());
        assert!(!trace.preconditions_met);

        // Dual-Hesse-like synthetic profile (not realizable over the reals):
        // twelve triple points on nine lines. The chain fails exactly at the
        // Melchior link.
        let trace = free_chain_trace(&profile(9, &[(3, 12)]));
        assert!(trace.preconditions_met);
        let failing: Vec<&str> = trace
            .links
            .iter()
            .filter(|l| !l.holds)
            .map(|l| l.name.as_str())
            .collect();
        assert_eq!(failing, vec!["melchior"]);
    }
}
