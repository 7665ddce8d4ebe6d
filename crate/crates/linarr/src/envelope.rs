//! Integer feasibility engine over multiplicity profiles.
//!
//! For a given line count d the engine either enumerates the multiplicity
//! profiles compatible with a chosen set of necessary conditions, or - past
//! the enumeration cap - applies the closed-form certificate that the same
//! conditions imply. Every certificate says explicitly that feasibility is a
//! necessary-condition envelope: it never asserts that a real arrangement
//! with a given profile exists.

use num_traits::Zero;

use crate::arrangement::MultiplicityProfile;
use crate::bounds;
use crate::error::{Error, Result};
use crate::rational::{fmt_rat, rat, Rat};

/// Default cap on the exact enumeration; the profile loop is roughly cubic
/// in d and explodes past desk scale.
pub const ENUMERATION_CAP: usize = 30;

/// Default cap on recorded witnesses per d.
pub const WITNESS_LIMIT: usize = 10;

/// Caveat attached verbatim to every certificate.
pub const ENVELOPE_CAVEAT: &str = "Feasibility certifies only the necessary-condition \
     envelope; it does not assert that a real arrangement with these invariants exists.";

/// Which necessary conditions the enumeration enforces. The pair-count
/// identity C(d,2) = sum_r C(r,2) t_r is always enforced; it defines the
/// search space.
#[derive(Clone, Debug, Default)]
pub struct ConstraintSet {
    pub melchior: bool,
    pub shnurnikov: bool,
    /// Exponent discriminant must be nonnegative.
    pub discriminant_nonneg: bool,
    /// Exponent quadratic must have an integer root.
    pub integer_free_root: bool,
    /// Per-multiplicity caps from the combined t_k bound, applied at each k
    /// whose hypothesis (no higher multiplicities) holds.
    pub tk_caps: bool,
    /// t_5 floor for free arrangements (active once d >= 8).
    pub t5_floor: bool,
    /// Plus-one-generated double/triple bound, tried for every h in the
    /// inclusive range.
    pub pog_t23_h: Option<(usize, usize)>,
}

impl ConstraintSet {
    /// The conjunction used for the free-arrangement envelope.
    pub fn free() -> Self {
        Self {
            melchior: true,
            shnurnikov: true,
            discriminant_nonneg: true,
            integer_free_root: true,
            tk_caps: true,
            ..Self::default()
        }
    }

    /// The conjunction used for the plus-one-generated envelope.
    pub fn pog(h_range: (usize, usize)) -> Self {
        Self {
            melchior: true,
            pog_t23_h: Some(h_range),
            ..Self::default()
        }
    }

    fn admits(&self, p: &MultiplicityProfile) -> bool {
        debug_assert!(p.pair_identity_holds());
        if self.melchior && bounds::melchior_check(p).failed() {
            return false;
        }
        if self.shnurnikov && bounds::shnurnikov_check(p).failed() {
            return false;
        }
        if self.discriminant_nonneg && exponent_discriminant_negative(p) {
            return false;
        }
        if self.integer_free_root && bounds::free_exponent_root(p).is_none() {
            return false;
        }
        if self.tk_caps && !tk_caps_hold(p) {
            return false;
        }
        if self.t5_floor && p.d() >= 8 {
            let floor = bounds::free_t5_floor(p.d()).expect("d >= 8");
            if rat(p.t(5)) < floor {
                return false;
            }
        }
        if let Some((h_lo, h_hi)) = self.pog_t23_h {
            // The right side grows with h, so the largest h is decisive.
            let r = bounds::pog_t23_check(p, h_hi.max(h_lo));
            if r.failed() {
                return false;
            }
        }
        true
    }
}

fn exponent_discriminant_negative(p: &MultiplicityProfile) -> bool {
    bounds::exponent_discriminant(p) < Rat::zero()
}

/// Apply the combined t_k cap at every k >= 4 whose hypothesis holds, i.e.
/// no multiplicities above k are present.
fn tk_caps_hold(p: &MultiplicityProfile) -> bool {
    let Some(max_mult) = p.max_multiplicity() else {
        return true;
    };
    if p.d() < 2 {
        return true;
    }
    for k in max_mult.max(4)..=5 {
        let cap = bounds::tk_bound(p.d(), k).expect("k >= 4 and d >= 2");
        if rat(p.t(k)) > cap {
            return false;
        }
    }
    true
}

/// Feasibility verdict for one d, with a witness profile when the
/// enumeration found one and a textual certificate of the binding
/// constraints.
#[derive(Clone, Debug)]
pub struct FeasibilityResult {
    pub d: usize,
    pub feasible: bool,
    pub witness: Option<MultiplicityProfile>,
    pub certificate: String,
}

/// Enumerate multiplicity profiles of d lines with multiplicities at most
/// `max_mult` (4 or 5) satisfying the pair-count identity and all enabled
/// constraints, stopping after `limit` hits.
pub fn enumerate_profiles(
    d: usize,
    max_mult: usize,
    cs: &ConstraintSet,
    limit: usize,
) -> Result<Vec<MultiplicityProfile>> {
    if !(max_mult == 4 || max_mult == 5) {
        return Err(Error::Precondition(format!(
            "enumeration supports max_mult 4 or 5, got {max_mult}"
        )));
    }
    if d < 3 {
        return Err(Error::Precondition(format!(
            "enumeration needs d >= 3, got {d}"
        )));
    }
    if d > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            d,
            cap: ENUMERATION_CAP,
        });
    }

    let pairs = d * (d - 1) / 2;
    let mut found = Vec::new();

    // Loop caps from the combined t_k bound (a necessary condition in both
    // regimes); the pair-count identity trims them further.
    let t5_cap = if max_mult == 5 && d >= 5 {
        floor_as_usize(&bounds::tk_bound(d, 5)?).min(pairs / 10)
    } else {
        0
    };
    't5: for t5 in 0..=t5_cap {
        let after_t5 = pairs - 10 * t5;
        let t4_cap = if d >= 4 {
            floor_as_usize(&bounds::tk_bound(d, 4)?).min(after_t5 / 6)
        } else {
            0
        };
        for t4 in 0..=t4_cap {
            let after_t4 = after_t5 - 6 * t4;
            for t3 in 0..=after_t4 / 3 {
                let t2 = after_t4 - 3 * t3;
                let profile = MultiplicityProfile::from_counts(
                    d,
                    &[(2, t2), (3, t3), (4, t4), (5, t5)],
                )?;
                if cs.admits(&profile) {
                    found.push(profile);
                    if found.len() >= limit {
                        break 't5;
                    }
                }
            }
        }
    }
    Ok(found)
}

fn floor_as_usize(x: &Rat) -> usize {
    use num_traits::ToPrimitive;
    x.floor().to_integer().to_usize().unwrap_or(0)
}

/// Free-arrangement envelope at d >= 8 under multiplicity <= 5. Up to the
/// enumeration cap the verdict comes from exhaustive enumeration; past it,
/// from the closed-form comparison of the t_5 floor and ceiling.
pub fn free_envelope(d: usize) -> Result<FeasibilityResult> {
    free_envelope_with(d, WITNESS_LIMIT)
}

/// `free_envelope` with an explicit witness limit for the enumeration path.
pub fn free_envelope_with(d: usize, limit: usize) -> Result<FeasibilityResult> {
    if d < 8 {
        return Err(Error::Precondition(format!(
            "the free envelope is defined for d >= 8, got {d}"
        )));
    }
    if d <= ENUMERATION_CAP {
        let witnesses = enumerate_profiles(d, 5, &ConstraintSet::free(), limit.max(1))?;
        let feasible = !witnesses.is_empty();
        let certificate = format!(
            "path: enumeration over (t_2, t_3, t_4, t_5) with the pair-count identity; \
             constraints: melchior, shnurnikov, discriminant >= 0, integer exponent root, \
             t_k caps; {} profile(s) found (limit {}). {}",
            witnesses.len(),
            limit.max(1),
            ENVELOPE_CAVEAT
        );
        Ok(FeasibilityResult {
            d,
            feasible,
            witness: witnesses.into_iter().next(),
            certificate,
        })
    } else {
        let (lhs, rhs) = bounds::free_boundary(d);
        let feasible = lhs <= rhs;
        let floor = bounds::free_t5_floor(d)?;
        let ceiling = bounds::tk_bound_global(d, 5)?;
        let relation = if feasible { "<=" } else { ">" };
        let certificate = format!(
            "path: closed form; t_5 floor (d-3)(d-19)/24 = {} and ceiling (d(d-1)-16)/25 = {}; \
             25(d-3)(d-19) = {lhs} {relation} 24(d(d-1)-16) = {rhs}, so the envelope is \
             {}FEASIBLE{}. {}",
            fmt_rat(&floor),
            fmt_rat(&ceiling),
            if feasible { "" } else { "IN" },
            if feasible {
                ""
            } else {
                " (the floor exceeds the ceiling)"
            },
            ENVELOPE_CAVEAT
        );
        Ok(FeasibilityResult {
            d,
            feasible,
            witness: None,
            certificate,
        })
    }
}

/// Plus-one-generated envelope at d >= 3 under multiplicity <= 4: feasible
/// iff some h in [1, d-2] satisfies d^2 - 22d + 57 - 28h <= 0. Below the
/// enumeration cap the profile enumeration cross-validates the closed form
/// (enumeration-feasible must imply closed-form-feasible).
pub fn pog_envelope(d: usize) -> Result<FeasibilityResult> {
    pog_envelope_with(d, WITNESS_LIMIT)
}

/// `pog_envelope` with an explicit witness limit for the cross-check
/// enumeration.
pub fn pog_envelope_with(d: usize, limit: usize) -> Result<FeasibilityResult> {
    if d < 3 {
        return Err(Error::Precondition(format!(
            "the plus-one envelope is defined for d >= 3, got {d}"
        )));
    }
    let h_min = bounds::pog_minimal_h(d);
    let h_max = d - 2;
    let feasible = h_min <= h_max;
    let base = if feasible {
        let q = d as i64 * d as i64 - 22 * d as i64 + 57;
        format!(
            "closed form: minimal h = {h_min} (within [1, {h_max}]) gives \
             d^2 - 22d + 57 - 28h = {} <= 0",
            q - 28 * h_min as i64
        )
    } else {
        let q = d as i64 * d as i64 - 22 * d as i64 + 57;
        format!(
            "closed form: even h = d - 2 = {h_max} leaves d^2 - 22d + 57 - 28h = {} > 0; \
             no admissible h exists",
            q - 28 * h_max as i64
        )
    };

    let mut witness = None;
    let mut cross = String::new();
    if d <= ENUMERATION_CAP {
        let witnesses = enumerate_profiles(d, 4, &ConstraintSet::pog((1, h_max)), limit.max(1))?;
        let enum_feasible = !witnesses.is_empty();
        if enum_feasible && !feasible {
            return Err(Error::Inconsistent(format!(
                "pog envelope at d = {d}: enumeration found a profile but the closed form \
                 refutes every h"
            )));
        }
        witness = witnesses.into_iter().next();
        cross = format!(
            "; enumeration cross-check (melchior + double/triple bound over h in [1, {h_max}]): \
             {}",
            if enum_feasible {
                "profile found"
            } else {
                "no profile"
            }
        );
    }

    Ok(FeasibilityResult {
        d,
        feasible,
        witness,
        certificate: format!("{base}{cross}. {ENVELOPE_CAVEAT}"),
    })
}
