//! Catalog scans and their JSON Lines reports.
//!
//! A scan report is one header object followed by one finding object per
//! line, in a fixed key order, so that identical scans produce
//! byte-identical files. Findings come in two kinds: `non_r_scan` rows
//! record the non-R verdict per catalog entry, `claim` rows record one
//! claim checker verdict per instance.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::Budgets;
use crate::catalog::Catalog;
use crate::claims::{run_all_claims, ClaimId, ClaimReport, ClaimStatus};
use crate::classes::is_non_r_group;
use crate::error::GroupError;
use crate::subgroup::enumerate_subgroups;

pub const FORMAT_VERSION: u32 = 1;

/// First line of a report file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub format_version: u32,
    pub max_order: usize,
    pub budgets: Budgets,
    pub catalog_size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    NonRScan,
    Claim,
}

/// Non-R scan verdict for one entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScanVerdict {
    #[serde(rename = "non-r")]
    NonR,
    #[serde(rename = "not-non-r")]
    NotNonR,
    #[serde(rename = "not-applicable")]
    NotApplicable,
    #[serde(rename = "budget-exceeded")]
    BudgetExceeded,
}

/// One report line. For `non_r_scan` rows `verdict` is set and `claim_id`
/// and `status` are null; for `claim` rows it is the other way around.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub group: String,
    pub order: usize,
    pub kind: FindingKind,
    pub verdict: Option<ScanVerdict>,
    pub witness_subgroup: Option<Vec<String>>,
    pub class_group_order: Option<usize>,
    pub claim_id: Option<String>,
    pub status: Option<String>,
    pub notes: String,
}

/// A full scan result: header plus findings sorted by
/// (order, group, kind, claim, subgroup).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub header: ReportHeader,
    pub findings: Vec<Finding>,
}

impl ScanReport {
    /// Counts of claim findings per (claim id, status).
    pub fn claim_summary(&self) -> BTreeMap<(String, String), usize> {
        let mut out = BTreeMap::new();
        for f in &self.findings {
            if f.kind == FindingKind::Claim {
                let key = (
                    f.claim_id.clone().unwrap_or_default(),
                    f.status.clone().unwrap_or_default(),
                );
                *out.entry(key).or_insert(0) += 1;
            }
        }
        out
    }

    /// Every claim finding whose status is `fails`, verbatim.
    pub fn counterexamples(&self) -> Vec<&Finding> {
        self.findings
            .iter()
            .filter(|f| f.kind == FindingKind::Claim && f.status.as_deref() == Some("fails"))
            .collect()
    }

    fn sort_findings(&mut self) {
        self.findings.sort_by(|a, b| {
            (a.order, &a.group, a.kind, &a.claim_id, &a.witness_subgroup, &a.notes).cmp(&(
                b.order,
                &b.group,
                b.kind,
                &b.claim_id,
                &b.witness_subgroup,
                &b.notes,
            ))
        });
    }
}

fn header_for(catalog: &Catalog, budgets: &Budgets) -> ReportHeader {
    ReportHeader {
        format_version: FORMAT_VERSION,
        max_order: catalog.max_order,
        budgets: *budgets,
        catalog_size: catalog.entries.len(),
    }
}

/// Runs the non-R classifier over every catalog entry. Abelian entries are
/// recorded as not applicable; per-entry budget blowups are recorded inline
/// and the scan continues.
pub fn scan_non_selfclass(catalog: &Catalog, budgets: &Budgets) -> Result<ScanReport, GroupError> {
    let mut findings = Vec::new();
    for entry in &catalog.entries {
        findings.push(scan_entry(entry, budgets));
    }
    let mut report = ScanReport {
        header: header_for(catalog, budgets),
        findings,
    };
    report.sort_findings();
    Ok(report)
}

fn scan_entry(entry: &crate::catalog::CatalogEntry, budgets: &Budgets) -> Finding {
    let mut finding = Finding {
        group: entry.name.clone(),
        order: entry.order,
        kind: FindingKind::NonRScan,
        verdict: None,
        witness_subgroup: None,
        class_group_order: None,
        claim_id: None,
        status: None,
        notes: String::new(),
    };
    if !entry.dedup_verified {
        finding.notes = "entry may duplicate another catalog entry (dedup budget exceeded); ".into();
    }
    let group = match entry.build(crate::catalog::MAX_CATALOG_ORDER) {
        Ok(g) => g,
        Err(e) => {
            finding.verdict = Some(ScanVerdict::BudgetExceeded);
            finding.notes.push_str(&e.to_string());
            return finding;
        }
    };
    if group.is_abelian() {
        finding.verdict = Some(ScanVerdict::NotApplicable);
        finding.notes.push_str("abelian group: it has no nonabelian subgroup");
        return finding;
    }
    let deadline = budgets.deadline();
    let outcome = enumerate_subgroups(&group, budgets.enumeration_cap, deadline)
        .and_then(|subs| is_non_r_group(&group, &subs, deadline));
    match outcome {
        Ok(verdict) => {
            if let Some(w) = verdict.witness {
                finding.verdict = Some(ScanVerdict::NonR);
                finding.witness_subgroup = Some(w.subgroup.set.names(&group));
                finding.class_group_order = Some(w.class_group.order());
                finding.notes.push_str(&format!(
                    "sandwich family over the witness subgroup: partition=true, forms_group=true, {} blocks",
                    w.class_group.order()
                ));
            } else {
                finding.verdict = Some(ScanVerdict::NotNonR);
                let detail: Vec<String> = verdict
                    .refusals
                    .iter()
                    .map(|(info, partition, _)| {
                        format!(
                            "H={}: partition={}, forms_group=false",
                            info.set.render(&group),
                            partition
                        )
                    })
                    .collect();
                finding.notes.push_str(&detail.join("; "));
            }
        }
        Err(e) => {
            finding.verdict = Some(ScanVerdict::BudgetExceeded);
            finding.notes.push_str(&e.to_string());
        }
    }
    finding
}

/// Runs the selected claim checkers over every catalog entry.
pub fn scan_claims(
    catalog: &Catalog,
    claims: &[ClaimId],
    budgets: &Budgets,
) -> Result<ScanReport, GroupError> {
    let mut findings = Vec::new();
    for entry in &catalog.entries {
        claim_findings_for_entry(entry, claims, budgets, &mut findings);
    }
    let mut report = ScanReport {
        header: header_for(catalog, budgets),
        findings,
    };
    report.sort_findings();
    Ok(report)
}

fn claim_findings_for_entry(
    entry: &crate::catalog::CatalogEntry,
    claims: &[ClaimId],
    budgets: &Budgets,
    findings: &mut Vec<Finding>,
) {
    let base = Finding {
        group: entry.name.clone(),
        order: entry.order,
        kind: FindingKind::Claim,
        verdict: None,
        witness_subgroup: None,
        class_group_order: None,
        claim_id: None,
        status: None,
        notes: String::new(),
    };
    let group = match entry.build(crate::catalog::MAX_CATALOG_ORDER) {
        Ok(g) => g,
        Err(e) => {
            let mut f = base;
            f.status = Some(ClaimStatus::BudgetExceeded.to_string());
            f.notes = e.to_string();
            findings.push(f);
            return;
        }
    };
    match run_all_claims(&group, &entry.name, claims, budgets) {
        Ok(run) => {
            for report in run.reports {
                findings.push(claim_report_to_finding(entry, &report));
            }
            if run.truncated {
                let mut f = base;
                f.status = Some(ClaimStatus::BudgetExceeded.to_string());
                f.notes = "claim run truncated by the time budget".into();
                findings.push(f);
            }
        }
        Err(e) => {
            let mut f = base;
            f.status = Some(ClaimStatus::BudgetExceeded.to_string());
            f.notes = e.to_string();
            findings.push(f);
        }
    }
}

fn claim_report_to_finding(entry: &crate::catalog::CatalogEntry, report: &ClaimReport) -> Finding {
    let mut notes = report.notes.clone();
    if let Some(k) = &report.second_subgroup {
        notes = format!("K={{{}}}; {notes}", k.join(","));
    }
    if let (Some(lhs), Some(rhs)) = (report.lhs, report.rhs) {
        notes = format!("lhs={lhs}, rhs={rhs}; {notes}");
    }
    if let Some(w) = &report.witness {
        let rendered = serde_json::to_string(w).expect("witness serializes");
        notes = if notes.is_empty() {
            format!("witness={rendered}")
        } else {
            format!("{notes}; witness={rendered}")
        };
    }
    Finding {
        group: entry.name.clone(),
        order: entry.order,
        kind: FindingKind::Claim,
        verdict: None,
        witness_subgroup: report.subgroup.clone(),
        class_group_order: None,
        claim_id: Some(report.claim.code().to_string()),
        status: Some(report.status.to_string()),
        notes,
    }
}

/// Runs both scans and merges their findings into one report.
pub fn scan_all(
    catalog: &Catalog,
    claims: &[ClaimId],
    budgets: &Budgets,
) -> Result<ScanReport, GroupError> {
    let mut report = scan_non_selfclass(catalog, budgets)?;
    let claims_report = scan_claims(catalog, claims, budgets)?;
    report.findings.extend(claims_report.findings);
    report.sort_findings();
    Ok(report)
}

/// Errors reading or writing report files.
#[derive(Debug, Error)]
pub enum ReportIoError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// Writes the report as JSON Lines; two persists of the same report are
/// byte-identical.
pub fn persist_report(report: &ScanReport, path: &Path) -> Result<(), ReportIoError> {
    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    write_report(report, &mut file)?;
    file.flush()?;
    Ok(())
}

pub fn write_report<W: Write>(report: &ScanReport, out: &mut W) -> Result<(), ReportIoError> {
    let header = serde_json::to_string(&report.header).expect("header serializes");
    out.write_all(header.as_bytes())?;
    out.write_all(b"\n")?;
    for finding in &report.findings {
        let line = serde_json::to_string(finding).expect("finding serializes");
        out.write_all(line.as_bytes())?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Reads a report back; `load(persist(r))` equals `r`.
pub fn load_report(path: &Path) -> Result<ScanReport, ReportIoError> {
    let file = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut lines = file.lines();
    let header_line = lines.next().ok_or(ReportIoError::Malformed {
        line: 1,
        message: "empty report file".to_string(),
    })??;
    let header: ReportHeader =
        serde_json::from_str(&header_line).map_err(|e| ReportIoError::Malformed {
            line: 1,
            message: e.to_string(),
        })?;
    if header.format_version != FORMAT_VERSION {
        return Err(ReportIoError::Malformed {
            line: 1,
            message: format!("unsupported format version {}", header.format_version),
        });
    }
    let mut findings = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line_no = idx + 2;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let finding: Finding =
            serde_json::from_str(&line).map_err(|e| ReportIoError::Malformed {
                line: line_no,
                message: e.to_string(),
            })?;
        findings.push(finding);
    }
    Ok(ScanReport { header, findings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_catalog;

    #[test]
    fn scan_of_small_catalog_flags_nothing() {
        let cat = build_catalog(5, &Budgets::default()).unwrap();
        let report = scan_non_selfclass(&cat, &Budgets::default()).unwrap();
        assert!(report
            .findings
            .iter()
            .all(|f| f.verdict == Some(ScanVerdict::NotApplicable)));
    }

    #[test]
    fn scan_eight_flags_s3_d4_q8() {
        let cat = build_catalog(8, &Budgets::default()).unwrap();
        let report = scan_non_selfclass(&cat, &Budgets::default()).unwrap();
        let flagged: Vec<(&str, Option<usize>)> = report
            .findings
            .iter()
            .filter(|f| f.verdict == Some(ScanVerdict::NonR))
            .map(|f| (f.group.as_str(), f.class_group_order))
            .collect();
        assert_eq!(
            flagged,
            vec![("S3", Some(2)), ("D4", Some(4)), ("Q8", Some(4))]
        );
    }

    #[test]
    fn persist_load_roundtrip_and_determinism() {
        let cat = build_catalog(6, &Budgets::default()).unwrap();
        let report = scan_all(&cat, &ClaimId::ALL, &Budgets::default()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let p1 = dir.path().join("a.jsonl");
        let p2 = dir.path().join("b.jsonl");
        persist_report(&report, &p1).unwrap();
        persist_report(&report, &p2).unwrap();
        assert_eq!(std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
        let loaded = load_report(&p1).unwrap();
        assert_eq!(loaded, report);
    }

    #[test]
    fn load_rejects_truncated_lines() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("bad.jsonl");
        std::fs::write(
            &p,
            "{\"format_version\":1,\"max_order\":4,\"budgets\":{\"time_budget_ms\":1,\"order_cap\":1,\"enumeration_cap\":1,\"pair_cap\":1},\"catalog_size\":0}\n{\"group\":\"Z1\",\"ord\n",
        )
        .unwrap();
        match load_report(&p).unwrap_err() {
            ReportIoError::Malformed { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn claim_scan_l31_has_zero_failures_up_to_eight() {
        let cat = build_catalog(8, &Budgets::default()).unwrap();
        let report = scan_claims(&cat, &[ClaimId::CardinalitySandwich], &Budgets::default()).unwrap();
        assert!(report.counterexamples().is_empty());
        assert!(!report.findings.is_empty());
    }

    #[test]
    fn claim_scan_l39_reports_the_z6_failure() {
        let cat = build_catalog(8, &Budgets::default()).unwrap();
        let report = scan_claims(&cat, &[ClaimId::OrderLemma], &Budgets::default()).unwrap();
        let z6_failure = report.counterexamples().iter().any(|f| {
            f.group == "Z6"
                && f.witness_subgroup.as_deref() == Some(&["e".to_string(), "a3".to_string()])
        });
        assert!(z6_failure);
    }

    #[test]
    fn empty_catalog_scan() {
        let cat = Catalog {
            max_order: 0,
            entries: vec![],
            unverified_pairs: vec![],
        };
        let report = scan_all(&cat, &ClaimId::ALL, &Budgets::default()).unwrap();
        assert!(report.findings.is_empty());
        assert_eq!(report.claim_summary().len(), 0);
    }

    #[test]
    fn scan_twelve_matches_the_hand_derived_verdicts() {
        let cat = build_catalog(12, &Budgets::default()).unwrap();
        let report = scan_non_selfclass(&cat, &Budgets::default()).unwrap();
        let rows: Vec<(&str, Option<ScanVerdict>, Option<usize>)> = report
            .findings
            .iter()
            .filter(|f| {
                matches!(f.verdict, Some(ScanVerdict::NonR) | Some(ScanVerdict::NotNonR))
            })
            .map(|f| (f.group.as_str(), f.verdict, f.class_group_order))
            .collect();
        assert_eq!(
            rows,
            vec![
                ("S3", Some(ScanVerdict::NonR), Some(2)),
                ("D4", Some(ScanVerdict::NonR), Some(4)),
                ("Q8", Some(ScanVerdict::NonR), Some(4)),
                ("D5", Some(ScanVerdict::NonR), Some(2)),
                ("A4", Some(ScanVerdict::NotNonR), None),
                ("D6", Some(ScanVerdict::NonR), Some(4)),
                ("Dic3", Some(ScanVerdict::NotNonR), None),
            ]
        );
        // D6's witness is its first subgroup of order 6 (a copy of S3)
        let d6 = report.findings.iter().find(|f| f.group == "D6").unwrap();
        assert_eq!(
            d6.witness_subgroup.as_deref(),
            Some(&["e".to_string(), "r2".into(), "r4".into(), "s".into(), "r2s".into(), "r4s".into()][..])
        );
        // A4 and Dic3 refuse because their sandwich families overlap
        for name in ["A4", "Dic3"] {
            let f = report.findings.iter().find(|f| f.group == name).unwrap();
            assert!(f.notes.contains("partition=false"), "{name}: {}", f.notes);
        }
    }

    #[test]
    fn abelian_entries_are_never_flagged() {
        let cat = build_catalog(16, &Budgets::default()).unwrap();
        let report = scan_non_selfclass(&cat, &Budgets::default()).unwrap();
        for f in &report.findings {
            let g = crate::parse::parse_group_expr(&f.group).unwrap().build(200).unwrap();
            if g.is_abelian() {
                assert_eq!(f.verdict, Some(ScanVerdict::NotApplicable), "{}", f.group);
            } else {
                assert_ne!(f.verdict, Some(ScanVerdict::NotApplicable), "{}", f.group);
            }
        }
    }

    #[test]
    fn scan_monotonicity() {
        let small = build_catalog(6, &Budgets::default()).unwrap();
        let large = build_catalog(8, &Budgets::default()).unwrap();
        let a = scan_non_selfclass(&small, &Budgets::default()).unwrap();
        let b = scan_non_selfclass(&large, &Budgets::default()).unwrap();
        let prefix: Vec<_> = b.findings.iter().take(a.findings.len()).collect();
        let original: Vec<_> = a.findings.iter().collect();
        assert_eq!(prefix, original);
    }
}
