//! Freeness and plus-one-generated classification.
//!
//! Two independent characterizations are computed for each verdict and must
//! agree: the type criterion from the computed generator degrees, and the
//! du Plessis-Wall equality (for freeness) or the Dimca-Sticlaru Tjurina
//! formula (for plus-one generated curves with exactly three generators).
//! A disagreement is reported as an internal consistency violation rather
//! than silently picking one side.

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::syzygy::{self, SyzygyAnalysis};

/// Classification verdict for one arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub d: usize,
    /// Minimal relation degree d_1.
    pub d1: usize,
    pub gen_degrees: Vec<usize>,
    pub tau: usize,
    /// du Plessis-Wall upper bound for (d, d_1).
    pub tau_max: usize,
    /// Type d_1 + d_2 + 1 - d; 0 is free, 1 is plus-one generated. Negative
    /// values are reported verbatim.
    pub type_t: i64,
    pub is_free: bool,
    pub is_pog: bool,
    /// d_3 - d_2 + 1 when there are exactly three generators.
    pub h: Option<usize>,
    /// Set when the arrangement falls outside the free / plus-one range.
    pub note: Option<String>,
}

fn binom2(n: usize) -> usize {
    n * (n - 1) / 2
}

/// du Plessis-Wall upper bound on the total Tjurina number of a degree-d
/// curve with minimal relation degree d1.
pub fn tau_max(d: usize, d1: usize) -> Result<usize> {
    if d1 + 1 > d {
        return Err(Error::Precondition(format!(
            "tau_max needs 0 <= d1 <= d - 1 (got d = {d}, d1 = {d1})"
        )));
    }
    let base = (d - 1) * (d - d1 - 1) + d1 * d1;
    if 2 * d1 < d {
        Ok(base)
    } else {
        Ok(base - binom2(2 * d1 - d + 2))
    }
}

/// Freeness by the du Plessis-Wall equality: certifies freeness only in the
/// range d1 < d/2, where the equality is an if-and-only-if.
pub fn is_free(d: usize, d1: usize, tau: usize) -> bool {
    2 * d1 < d && tau_max(d, d1).map(|m| tau == m).unwrap_or(false)
}

/// Type t = d1 + d2 + 1 - d from the two smallest generator degrees.
pub fn curve_type(d: usize, d1: usize, d2: usize) -> i64 {
    debug_assert!(d1 <= d2);
    d1 as i64 + d2 as i64 + 1 - d as i64
}

/// The Dimca-Sticlaru Tjurina characterization for a curve with exactly
/// three minimal syzygies of degrees d1 <= d2 <= d3.
pub fn is_pog_by_tau(d: usize, d1: usize, d2: usize, d3: usize, tau: usize) -> bool {
    debug_assert!(d1 <= d2 && d2 <= d3);
    let expected =
        (d as i64 - 1) * (d as i64 - 1) - d1 as i64 * (d as i64 - d1 as i64 - 1) - (d3 as i64
            - d2 as i64
            + 1);
    tau as i64 == expected
}

/// Classify an arrangement with the default generator search cap.
pub fn classify(a: &Arrangement) -> Result<ClassificationReport> {
    classify_with(a, 2 * a.d())
}

/// Classify with an explicit generator search cap.
pub fn classify_with(a: &Arrangement, r_max: usize) -> Result<ClassificationReport> {
    if a.d() < 3 {
        return Err(Error::Precondition(
            "classification needs d >= 3 lines".into(),
        ));
    }
    let analysis = syzygy::analyze_with(a, r_max)?;
    from_analysis(&analysis)
}

/// Build the report from an existing syzygy analysis.
pub fn from_analysis(analysis: &SyzygyAnalysis) -> Result<ClassificationReport> {
    let d = analysis.d;
    let gens = &analysis.gen_degrees;
    let m = gens.len();
    if m < 2 {
        return Err(Error::Inconsistent(format!(
            "syzygy module reported {m} generators; it always needs at least two"
        )));
    }
    let (d1, d2) = (gens[0], gens[1]);
    if d1 != analysis.mdr {
        return Err(Error::Inconsistent(
            "smallest generator degree differs from mdr".into(),
        ));
    }
    let tau = analysis.tau;
    let type_t = curve_type(d, d1, d2);

    // Route A: type from the generator degrees. Route B: the du Plessis-Wall
    // equality. A free curve has d1 + d2 = d - 1 with d1 <= d2, hence
    // d1 < d/2, so route B is decisive on the whole free range.
    let free_by_type = type_t == 0;
    let free_by_equality = is_free(d, d1, tau);
    if free_by_type != free_by_equality {
        return Err(Error::Inconsistent(format!(
            "freeness criteria disagree for d = {d}: type gives {free_by_type}, \
             Tjurina equality gives {free_by_equality}"
        )));
    }
    if free_by_type && m != 2 {
        return Err(Error::Inconsistent(format!(
            "type 0 with {m} generators"
        )));
    }

    let pog_by_type = type_t == 1;
    if pog_by_type && m != 3 {
        return Err(Error::Inconsistent(format!("type 1 with {m} generators")));
    }
    if m == 3 {
        let pog_by_formula = is_pog_by_tau(d, gens[0], gens[1], gens[2], tau);
        if pog_by_type != pog_by_formula {
            return Err(Error::Inconsistent(format!(
                "plus-one criteria disagree for d = {d}: type gives {pog_by_type}, \
                 Tjurina formula gives {pog_by_formula}"
            )));
        }
    }

    let h = (m == 3).then(|| gens[2] - gens[1] + 1);
    let note = (m > 3).then(|| {
        format!("{m} minimal generators: type >= 2, outside the free/plus-one range")
    });

    Ok(ClassificationReport {
        d,
        d1,
        gen_degrees: gens.clone(),
        tau,
        tau_max: tau_max(d, d1)?,
        type_t,
        is_free: free_by_type,
        is_pog: pog_by_type,
        h,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{
        complete_quadrilateral, generic_four_lines, near_pencil, random_arrangement, triangle,
        Arrangement,
    };

    #[test]
    fn tau_max_examples() {
        // d1 < d/2 branch.
        assert_eq!(tau_max(6, 2).unwrap(), 19);
        assert_eq!(tau_max(3, 1).unwrap(), 3);
        // d/2 <= d1 <= d-1 branch: C(2d1-d+2, 2) is subtracted.
        assert_eq!(tau_max(4, 2).unwrap(), 6);
        assert!(tau_max(4, 4).is_err());
    }

    #[test]
    fn is_free_examples() {
        assert!(is_free(3, 1, 3));
        assert!(is_free(6, 2, 19));
        // d1 >= d/2: the equality no longer certifies freeness.
        assert!(!is_free(4, 2, 6));
        assert!(!is_free(6, 2, 18));
    }

    #[test]
    fn curve_type_examples() {
        assert_eq!(curve_type(3, 1, 1), 0);
        assert_eq!(curve_type(6, 2, 3), 0);
        assert_eq!(curve_type(4, 2, 2), 1);
    }

    #[test]
    fn pog_formula_examples() {
        assert!(is_pog_by_tau(4, 2, 2, 2, 6));
        assert!(!is_pog_by_tau(4, 2, 2, 2, 7));
        // 16 - 2*2 - 2 = 10 != 12
        assert!(!is_pog_by_tau(5, 2, 2, 3, 12));
    }

    #[test]
    fn classify_triangle() {
        let report = classify(&triangle()).unwrap();
        assert!(report.is_free);
        assert!(!report.is_pog);
        assert_eq!(report.gen_degrees, vec![1, 1]);
        assert_eq!(report.type_t, 0);
        assert_eq!(report.tau, 3);
        assert_eq!(report.tau, report.tau_max);
        assert_eq!(report.h, None);
    }

    #[test]
    fn classify_quadrilateral() {
        let report = classify(&complete_quadrilateral()).unwrap();
        assert!(report.is_free);
        assert_eq!(report.gen_degrees, vec![2, 3]);
        assert_eq!(report.tau, 19);
        assert_eq!(report.tau_max, 19);
    }

    #[test]
    fn classify_generic_four_lines() {
        let report = classify(&generic_four_lines()).unwrap();
        assert!(!report.is_free);
        assert!(report.is_pog);
        assert_eq!(report.gen_degrees, vec![2, 2, 2]);
        assert_eq!(report.type_t, 1);
        assert_eq!(report.h, Some(1));
        assert_eq!(report.tau, 6);
    }

    #[test]
    fn classify_near_pencil_five() {
        // Four lines through a point plus one generic line: free (1, 3).
        let report = classify(&near_pencil(5).unwrap()).unwrap();
        assert!(report.is_free);
        assert_eq!(report.gen_degrees, vec![1, 3]);
        assert_eq!(report.tau, 13);
        assert_eq!(report.type_t, 0);
    }

    #[test]
    fn classify_rejects_small_arrangements() {
        let two = Arrangement::from_int_coeffs(&[[1, 0, 0], [0, 1, 0]]).unwrap();
        assert!(matches!(classify(&two), Err(Error::Precondition(_))));
    }

    #[test]
    fn du_plessis_wall_bound_holds_on_random_arrangements() {
        for seed in 0..10 {
            let a = random_arrangement(5, seed, 3).unwrap();
            let report = classify(&a).unwrap();
            assert!(
                report.tau <= report.tau_max,
                "seed {seed}: tau {} above bound {}",
                report.tau,
                report.tau_max
            );
        }
    }
}
