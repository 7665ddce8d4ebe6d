//! Arrangement-file parsing, report assembly, and the implementations
//! behind the binary's subcommands.
//!
//! Reports serialize deterministically: struct fields in declaration order,
//! maps in key order, every rational rendered canonically as "p/q" (or "n"
//! when integral). Identical inputs and flags therefore produce
//! byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arrangement::{random_arrangement, Arrangement, ProjectiveLine};
use crate::bounds::{self, BoundReport};
use crate::classify::{self, ClassificationReport};
use crate::envelope;
use crate::error::{Error, Result};
use crate::rational::{fmt_rat, parse_rat, rat, Rat};
use crate::syzygy::SyzygyAnalysis;

pub const SCHEMA_VERSION: &str = "1.0";

/// On-disk arrangement format: a JSON object with a top-level "lines" list
/// of three-element coefficient arrays. Coefficients are strings holding an
/// integer or a "p/q" rational, never floats.
#[derive(Debug, Deserialize)]
pub struct ArrangementFile {
    pub lines: Vec<[String; 3]>,
}

/// Parse arrangement text, reporting JSON positions for syntax errors and
/// array indices for semantic ones.
pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let file: ArrangementFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut lines = Vec::with_capacity(file.lines.len());
    for (index, triple) in file.lines.iter().enumerate() {
        let mut coeffs = [Rat::default(), Rat::default(), Rat::default()];
        for (axis, text) in triple.iter().enumerate() {
            coeffs[axis] = parse_rat(text).map_err(|message| Error::InvalidCoefficient {
                index,
                axis,
                message,
            })?;
        }
        let [a, b, c] = coeffs;
        let line = ProjectiveLine::new(a, b, c).map_err(|_| Error::ZeroLine { index })?;
        lines.push(line);
    }
    Arrangement::new(lines)
}

pub fn load_arrangement(path: &Path) -> Result<Arrangement> {
    parse_arrangement(&fs::read_to_string(path)?)
}

// ---------------------------------------------------------------------------
// Report schema
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub input_summary: InputSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub syzygy: Option<SyzygySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationSection>,
    pub bounds: Vec<BoundEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub envelope: Option<EnvelopeSection>,
}

impl Report {
    fn new(input_summary: InputSummary) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            input_summary,
            profile: None,
            syzygy: None,
            classification: None,
            bounds: Vec::new(),
            envelope: None,
        }
    }

    /// True when some check ran with its preconditions met and failed;
    /// drives the process exit code.
    pub fn has_failed_checks(&self) -> bool {
        self.bounds
            .iter()
            .any(|e| e.kind == "check" && e.preconditions_met && e.holds == Some(false))
    }
}

#[derive(Debug, Default, Serialize)]
pub struct InputSummary {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lines: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_min: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeff_bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<usize>,
}

impl InputSummary {
    fn for_command(command: &str) -> Self {
        Self {
            command: command.to_string(),
            ..Self::default()
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ProfileSection {
    pub d: usize,
    /// t_r keyed by multiplicity r.
    pub t: BTreeMap<usize, usize>,
    pub pair_identity: bool,
    pub tau_combinatorial: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_multiplicity: Option<usize>,
    pub per_line: Vec<PerLineProfile>,
}

#[derive(Debug, Serialize)]
pub struct PerLineProfile {
    pub line: usize,
    pub points: BTreeMap<usize, usize>,
}

#[derive(Debug, Serialize)]
pub struct SyzygySection {
    pub d: usize,
    pub mdr: usize,
    pub ar_dims: BTreeMap<usize, usize>,
    pub gen_degrees: Vec<usize>,
    pub milnor_dims: BTreeMap<usize, usize>,
    pub tau: usize,
}

impl From<&SyzygyAnalysis> for SyzygySection {
    fn from(s: &SyzygyAnalysis) -> Self {
        Self {
            d: s.d,
            mdr: s.mdr,
            ar_dims: s.ar_dims.clone(),
            gen_degrees: s.gen_degrees.clone(),
            milnor_dims: s.milnor_dims.clone(),
            tau: s.tau,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassificationSection {
    pub d: usize,
    pub d1: usize,
    pub gen_degrees: Vec<usize>,
    pub tau: usize,
    pub tau_max: usize,
    pub type_t: i64,
    pub is_free: bool,
    pub is_pog: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&ClassificationReport> for ClassificationSection {
    fn from(c: &ClassificationReport) -> Self {
        Self {
            d: c.d,
            d1: c.d1,
            gen_degrees: c.gen_degrees.clone(),
            tau: c.tau,
            tau_max: c.tau_max,
            type_t: c.type_t,
            is_free: c.is_free,
            is_pog: c.is_pog,
            h: c.h,
            note: c.note.clone(),
        }
    }
}

/// One named bound: either an inequality check with both sides, or a plain
/// value.
#[derive(Debug, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub kind: &'static str,
    pub preconditions_met: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl BoundEntry {
    fn check(report: &BoundReport) -> Self {
        Self {
            name: report.name.clone(),
            kind: "check",
            preconditions_met: report.preconditions_met,
            holds: Some(report.holds),
            lhs: Some(fmt_rat(&report.lhs)),
            rhs: Some(fmt_rat(&report.rhs)),
            value: None,
        }
    }

    fn named_check(name: &str, report: &BoundReport) -> Self {
        let mut entry = Self::check(report);
        entry.name = name.to_string();
        entry
    }

    fn int_check(name: &str, lhs: i64, rhs: i64, holds: bool) -> Self {
        Self {
            name: name.to_string(),
            kind: "check",
            preconditions_met: true,
            holds: Some(holds),
            lhs: Some(lhs.to_string()),
            rhs: Some(rhs.to_string()),
            value: None,
        }
    }

    fn value(name: &str, value: &Rat) -> Self {
        Self {
            name: name.to_string(),
            kind: "value",
            preconditions_met: true,
            holds: None,
            lhs: None,
            rhs: None,
            value: Some(fmt_rat(value)),
        }
    }

    fn inapplicable(name: &str) -> Self {
        Self {
            name: name.to_string(),
            kind: "value",
            preconditions_met: false,
            holds: None,
            lhs: None,
            rhs: None,
            value: None,
        }
    }

    fn count(name: &str, value: usize) -> Self {
        Self::value(name, &rat(value))
    }
}

#[derive(Debug, Serialize)]
pub struct EnvelopeSection {
    pub mode: String,
    pub results: Vec<FeasibilityEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub largest_feasible: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct FeasibilityEntry {
    pub d: usize,
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<usize, usize>>,
    pub certificate: String,
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn profile_section(a: &Arrangement) -> Result<ProfileSection> {
    let profile = a.profile();
    let per_line = (0..a.d())
        .map(|i| {
            Ok(PerLineProfile {
                line: i,
                points: a.per_line_profile(i)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProfileSection {
        d: profile.d(),
        t: profile.counts().clone(),
        pair_identity: profile.pair_identity_holds(),
        tau_combinatorial: profile.tau_combinatorial(),
        max_multiplicity: profile.max_multiplicity(),
        per_line,
    })
}

/// `analyze <path>`: combinatorial profile plus the Melchior and Shnurnikov
/// checks.
pub fn cmd_analyze(path: &Path) -> Result<Report> {
    let a = load_arrangement(path)?;
    let mut summary = InputSummary::for_command("analyze");
    summary.path = Some(path.display().to_string());
    summary.d = Some(a.d());
    summary.lines = Some(a.d());
    let mut report = Report::new(summary);
    report.profile = Some(profile_section(&a)?);
    let profile = a.profile();
    report.bounds.push(BoundEntry::check(&bounds::melchior_check(&profile)));
    report
        .bounds
        .push(BoundEntry::check(&bounds::shnurnikov_check(&profile)));
    Ok(report)
}

/// `classify <path>`: everything from `analyze` plus the syzygy analysis and
/// the freeness / plus-one-generated verdict.
pub fn cmd_classify(path: &Path, r_max: Option<usize>) -> Result<Report> {
    let mut report = cmd_analyze(path)?;
    report.input_summary.command = "classify".to_string();
    report.input_summary.r_max = r_max;
    let a = load_arrangement(path)?;
    let classification = classify::classify_with(&a, r_max.unwrap_or(2 * a.d()))?;
    let analysis = crate::syzygy::analyze_with(&a, r_max.unwrap_or(2 * a.d()))?;
    report.syzygy = Some(SyzygySection::from(&analysis));
    report.classification = Some(ClassificationSection::from(&classification));
    Ok(report)
}

/// `bounds --d D [--k K]`: the per-multiplicity point-count bounds and, for
/// d >= 8, the t_5 floor.
pub fn cmd_bounds(d: usize, k: usize) -> Result<Report> {
    if d < 2 {
        return Err(Error::Precondition(format!("bounds needs d >= 2, got {d}")));
    }
    let mut summary = InputSummary::for_command("bounds");
    summary.d = Some(d);
    summary.k = Some(k);
    let mut report = Report::new(summary);

    report.bounds.push(match bounds::tk_bound_global(d, k) {
        Ok(v) => BoundEntry::value("tk_bound_global", &v),
        Err(_) => BoundEntry::inapplicable("tk_bound_global"),
    });
    report.bounds.push(match bounds::tk_bound_per_line(d, k) {
        Ok(v) => BoundEntry::value("tk_bound_per_line", &v),
        Err(_) => BoundEntry::inapplicable("tk_bound_per_line"),
    });
    report.bounds.push(match bounds::tk_bound(d, k) {
        Ok(v) => BoundEntry::value("tk_bound", &v),
        Err(_) => BoundEntry::inapplicable("tk_bound"),
    });
    report.bounds.push(match bounds::free_t5_floor(d) {
        Ok(v) => BoundEntry::value("t5_floor", &v),
        Err(_) => BoundEntry::inapplicable("t5_floor"),
    });
    Ok(report)
}

/// `envelope --d-min A --d-max B --mode free|pog [--limit N]`.
pub fn cmd_envelope(d_min: usize, d_max: usize, mode: &str, limit: usize) -> Result<Report> {
    if d_min > d_max {
        return Err(Error::InvalidRange { d_min, d_max });
    }
    let mut summary = InputSummary::for_command("envelope");
    summary.d_min = Some(d_min);
    summary.d_max = Some(d_max);
    summary.mode = Some(mode.to_string());
    summary.limit = Some(limit);
    let mut report = Report::new(summary);

    let mut results = Vec::new();
    for d in d_min..=d_max {
        let r = match mode {
            "free" => envelope::free_envelope_with(d, limit)?,
            "pog" => envelope::pog_envelope_with(d, limit)?,
            other => {
                return Err(Error::Precondition(format!(
                    "unknown envelope mode `{other}` (expected free or pog)"
                )))
            }
        };
        results.push(FeasibilityEntry {
            d: r.d,
            feasible: r.feasible,
            witness: r.witness.map(|w| w.counts().clone()),
            certificate: r.certificate,
        });
    }
    let largest_feasible = results.iter().filter(|r| r.feasible).map(|r| r.d).max();
    report.envelope = Some(EnvelopeSection {
        mode: mode.to_string(),
        results,
        largest_feasible,
    });
    Ok(report)
}

/// `reproduce`: both headline bounds with their exact boundary evaluations.
pub fn cmd_reproduce() -> Report {
    let mut report = Report::new(InputSummary::for_command("reproduce"));

    let main_bound = bounds::free_line_count_bound();
    report.bounds.push(BoundEntry::count("main_bound", main_bound));
    let (lhs, rhs) = bounds::free_boundary(main_bound);
    report.bounds.push(BoundEntry::int_check(
        &format!("free_feasible_at_{main_bound}"),
        lhs,
        rhs,
        lhs <= rhs,
    ));
    let (lhs, rhs) = bounds::free_boundary(main_bound + 1);
    report.bounds.push(BoundEntry::int_check(
        &format!("free_infeasible_at_{}", main_bound + 1),
        lhs,
        rhs,
        lhs > rhs,
    ));

    let pog_bound = bounds::pog_line_count_bound();
    report.bounds.push(BoundEntry::count("pog_bound", pog_bound));
    let (lhs, rhs) = bounds::pog_boundary(pog_bound);
    report.bounds.push(BoundEntry::int_check(
        &format!("pog_feasible_at_{pog_bound}"),
        lhs,
        rhs,
        lhs <= rhs,
    ));
    let (lhs, rhs) = bounds::pog_boundary(pog_bound + 1);
    report.bounds.push(BoundEntry::int_check(
        &format!("pog_infeasible_at_{}", pog_bound + 1),
        lhs,
        rhs,
        lhs > rhs,
    ));
    report
}

/// `random --d D --seed S --count N [--coeff-bound B]`: generate seeded
/// arrangements, analyze (and for d >= 3 classify) each, and report the
/// number of invariant violations, which is expected to be zero.
pub fn cmd_random(
    d: usize,
    seed: u64,
    count: usize,
    coeff_bound: i64,
    r_max: Option<usize>,
) -> Result<Report> {
    if d < 2 {
        return Err(Error::Precondition(format!("random needs d >= 2, got {d}")));
    }
    let mut summary = InputSummary::for_command("random");
    summary.d = Some(d);
    summary.seed = Some(seed);
    summary.count = Some(count);
    summary.coeff_bound = Some(coeff_bound);
    summary.r_max = r_max;
    let mut report = Report::new(summary);

    let mut violations = 0usize;
    for i in 0..count {
        let s = seed + i as u64;
        let a = random_arrangement(d, s, coeff_bound)?;
        let profile = a.profile();

        let pair = BoundEntry::int_check(
            &format!("seed_{s}_pair_identity"),
            (d * (d - 1) / 2) as i64,
            profile.weighted_sum(|r| r * (r - 1) / 2) as i64,
            profile.pair_identity_holds(),
        );
        violations += usize::from(pair.holds == Some(false));
        report.bounds.push(pair);

        let per_line_ok = (0..d).all(|i| {
            a.per_line_profile(i)
                .map(|counts| counts.iter().map(|(&r, &t)| (r - 1) * t).sum::<usize>() == d - 1)
                .unwrap_or(false)
        });
        let per_line = BoundEntry::int_check(
            &format!("seed_{s}_per_line_identities"),
            (d - 1) as i64,
            (d - 1) as i64,
            per_line_ok,
        );
        violations += usize::from(!per_line_ok);
        report.bounds.push(per_line);

        for check in [
            bounds::melchior_check(&profile),
            bounds::shnurnikov_check(&profile),
        ] {
            let entry =
                BoundEntry::named_check(&format!("seed_{s}_{}", check.name), &check);
            violations += usize::from(check.failed());
            report.bounds.push(entry);
        }

        if d >= 3 {
            match classify::classify_with(&a, r_max.unwrap_or(2 * d)) {
                Ok(c) => {
                    let dpw = BoundEntry::int_check(
                        &format!("seed_{s}_tau_within_dpw"),
                        c.tau as i64,
                        c.tau_max as i64,
                        c.tau <= c.tau_max,
                    );
                    violations += usize::from(c.tau > c.tau_max);
                    report.bounds.push(dpw);
                }
                Err(Error::Inconsistent(msg)) => {
                    violations += 1;
                    report.bounds.push(BoundEntry {
                        name: format!("seed_{s}_classification_consistent"),
                        kind: "check",
                        preconditions_met: true,
                        holds: Some(false),
                        lhs: None,
                        rhs: None,
                        value: Some(msg),
                    });
                }
                Err(other) => return Err(other),
            }
        }
    }
    report
        .bounds
        .push(BoundEntry::count("invariant_violations", violations));
    Ok(report)
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = serde_json::to_string_pretty(report).expect("report serializes");
            out.push('\n');
            out
        }
        Format::Text => render_text(report),
    }
}

fn fmt_map(map: &BTreeMap<usize, usize>) -> String {
    let body: Vec<String> = map.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    format!("{{{}}}", body.join(", "))
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "schema_version: {}", report.schema_version);
    let _ = writeln!(out, "command: {}", report.input_summary.command);
    if let Some(path) = &report.input_summary.path {
        let _ = writeln!(out, "input: {path}");
    }
    if let Some(p) = &report.profile {
        let _ = writeln!(
            out,
            "profile: d={} t={} pair_identity={} tau_combinatorial={}",
            p.d,
            fmt_map(&p.t),
            p.pair_identity,
            p.tau_combinatorial
        );
        for line in &p.per_line {
            let _ = writeln!(out, "  line {}: {}", line.line, fmt_map(&line.points));
        }
    }
    if let Some(s) = &report.syzygy {
        let _ = writeln!(
            out,
            "syzygy: d={} mdr={} gen_degrees={:?} tau={}",
            s.d, s.mdr, s.gen_degrees, s.tau
        );
        let _ = writeln!(out, "  ar_dims: {}", fmt_map(&s.ar_dims));
        let _ = writeln!(out, "  milnor_dims: {}", fmt_map(&s.milnor_dims));
    }
    if let Some(c) = &report.classification {
        let _ = writeln!(
            out,
            "classification: type={} free={} plus_one_generated={} exponents={:?} tau={} tau_max={}",
            c.type_t, c.is_free, c.is_pog, c.gen_degrees, c.tau, c.tau_max
        );
        if let Some(h) = c.h {
            let _ = writeln!(out, "  h: {h}");
        }
        if let Some(note) = &c.note {
            let _ = writeln!(out, "  note: {note}");
        }
    }
    if !report.bounds.is_empty() {
        let _ = writeln!(out, "bounds:");
        for entry in &report.bounds {
            let status = if !entry.preconditions_met {
                "inapplicable".to_string()
            } else if let Some(holds) = entry.holds {
                let verdict = if holds { "holds" } else { "FAILS" };
                format!(
                    "{verdict} ({} vs {})",
                    entry.lhs.as_deref().unwrap_or("-"),
                    entry.rhs.as_deref().unwrap_or("-")
                )
            } else {
                entry.value.clone().unwrap_or_default()
            };
            let _ = writeln!(out, "  {}: {}", entry.name, status);
        }
    }
    if let Some(env) = &report.envelope {
        let _ = writeln!(out, "envelope ({}):", env.mode);
        for r in &env.results {
            let witness = r
                .witness
                .as_ref()
                .map(|w| format!(" witness={}", fmt_map(w)))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "  d={}: {}{}",
                r.d,
                if r.feasible { "feasible" } else { "infeasible" },
                witness
            );
            let _ = writeln!(out, "    {}", r.certificate);
        }
        match env.largest_feasible {
            Some(d) => {
                let _ = writeln!(out, "largest_feasible: {d}");
            }
            None => {
                let _ = writeln!(out, "largest_feasible: none");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_valid_file() {
        let a = parse_arrangement(
            r#"{"lines": [["1","0","0"], ["0","1","0"], ["1/2","-1/2","0"]]}"#,
        )
        .unwrap();
        assert_eq!(a.d(), 3);
        // 1/2 x - 1/2 y canonicalizes to x - y.
        assert_eq!(
            a.lines()[2],
            ProjectiveLine::from_ints(1, -1, 0).unwrap()
        );
    }

    #[test]
    fn parse_reports_json_position() {
        match parse_arrangement("{\"lines\": [\n  [\"1\",\"0\"") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_reports_bad_coefficient_index() {
        let text = r#"{"lines": [["1","0","0"], ["0","1.5","0"]]}"#;
        match parse_arrangement(text) {
            Err(Error::InvalidCoefficient { index, axis, .. }) => {
                assert_eq!((index, axis), (1, 1));
            }
            other => panic!("expected coefficient error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_duplicates_naming_both_indices() {
        let text = r#"{"lines": [["1","0","0"], ["0","1","0"], ["2","0","0"]]}"#;
        match parse_arrangement(text) {
            Err(Error::DuplicateLine { first, second }) => {
                assert_eq!((first, second), (0, 2));
            }
            other => panic!("expected duplicate error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_zero_triple() {
        let text = r#"{"lines": [["1","0","0"], ["0","0","0"]]}"#;
        assert!(matches!(
            parse_arrangement(text),
            Err(Error::ZeroLine { index: 1 })
        ));
    }

    #[test]
    fn reproduce_contains_exact_boundaries() {
        let report = cmd_reproduce();
        let json = render(&report, Format::Json);
        assert!(json.contains("\"main_bound\""));
        assert!(json.contains("\"value\": \"522\""));
        assert!(json.contains("\"pog_bound\""));
        assert!(json.contains("\"value\": \"47\""));
        for n in ["6526425", "6526704", "6552000", "6551760", "1296", "1324", "1369", "1352"] {
            assert!(json.contains(n), "missing boundary integer {n}");
        }
        assert!(!report.has_failed_checks());
    }

    #[test]
    fn render_text_is_stable() {
        let report = cmd_reproduce();
        assert_eq!(render(&report, Format::Text), render(&report, Format::Text));
        assert!(render(&report, Format::Text).contains("main_bound: 522"));
    }
}
