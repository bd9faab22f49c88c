//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse error (group expressions
//! and input files), 3 budget exceeded. All output is deterministic: two
//! runs with identical arguments produce byte-identical stdout and files.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::budget::Budgets;
use crate::catalog::build_catalog;
use crate::claims::{run_all_claims, ClaimId};
use crate::classes::{
    class_family, compare_classes, faithful_subgroups, is_non_r_group, is_r_group, ClassKind,
};
use crate::error::GroupError;
use crate::group::Group;
use crate::parse::{parse_cayley_file, parse_group_expr, parse_perm_gens_capped};
use crate::report::{persist_report, scan_all};
use crate::subgroup::{enumerate_subgroups, SubgroupInfo};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "sclab",
    about = "Finite-group laboratory: self-class partitions, class groups, claim checks, catalog scans",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the subgroups of a group with structural flags
    Subgroups(SubgroupsArgs),
    /// Compute a class family over a chosen subgroup
    Classes(ClassesArgs),
    /// Classify a group: faithful subgroups, R-group and non-R verdicts
    Classify(ClassifyArgs),
    /// Run the claim checkers on a group
    Verify(VerifyArgs),
    /// Scan a catalog of groups and persist a JSON Lines report
    Scan(ScanArgs),
    /// Compare the class constructions with double cosets for one element
    Compare(CompareArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// Group expression, e.g. "S3" or "Z2 x Z4"
    #[arg(long)]
    group: Option<String>,
    /// Cayley table file
    #[arg(long)]
    table: Option<PathBuf>,
    /// Permutation generator file (cycle notation, one generator per line)
    #[arg(long)]
    perms: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Time budget per operation in milliseconds
    /// (default: SCLAB_BUDGET_MS or 5000)
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Order cap for group construction (default 2000)
    #[arg(long)]
    max_order: Option<usize>,
}

impl BudgetArgs {
    fn budgets(&self) -> Budgets {
        let mut b = Budgets::default();
        b.time_budget_ms = self
            .budget_ms
            .or_else(|| std::env::var("SCLAB_BUDGET_MS").ok().and_then(|v| v.parse().ok()))
            .unwrap_or(b.time_budget_ms);
        if let Some(cap) = self.max_order {
            b.order_cap = cap;
        }
        b
    }
}

#[derive(Args)]
struct SubgroupsArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Only list abelian subgroups
    #[arg(long)]
    abelian_only: bool,
    /// Emit JSON instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassesArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Subgroup id as listed by `subgroups`
    #[arg(long)]
    subgroup_id: usize,
    /// Class construction: self, sandwich, or conj
    #[arg(long)]
    kind: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Comma-separated claim ids (e.g. "L3.9,T3.5"); default: all
    #[arg(long)]
    claims: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScanArgs {
    /// Largest group order included in the catalog
    #[arg(long)]
    max_order: usize,
    /// Report file to write (JSON Lines)
    #[arg(long)]
    out: PathBuf,
    /// Comma-separated claim ids to check; default: all
    #[arg(long)]
    claims: Option<String>,
    /// Time budget per catalog entry in milliseconds
    #[arg(long)]
    budget_ms: Option<u64>,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Subgroup id as listed by `subgroups`
    #[arg(long)]
    subgroup_id: usize,
    /// Element name, e.g. "(1 2)" or "a2"
    #[arg(long)]
    elem: String,
    #[arg(long)]
    json: bool,
}

/// A command failure destined for stderr, with its exit code.
enum Failure {
    Usage(String),
    Parse(String),
    Budget(String),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Budget(_) => EXIT_BUDGET,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Budget(m) => m,
        }
    }
}

fn classify_group_error(e: GroupError) -> Failure {
    match e {
        GroupError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    }
}

/// Parses argv and runs the selected command, writing results to `out`.
/// Returns the process exit code; error text goes to stderr.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are successes
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    print!("{e}");
                    EXIT_OK
                }
                _ => {
                    eprint!("{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.cmd {
        Cmd::Subgroups(args) => cmd_subgroups(args, out),
        Cmd::Classes(args) => cmd_classes(args, out),
        Cmd::Classify(args) => cmd_classify(args, out),
        Cmd::Verify(args) => cmd_verify(args, out),
        Cmd::Scan(args) => cmd_scan(args, out),
        Cmd::Compare(args) => cmd_compare(args, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.exit_code()
        }
    }
}

/// Resolves the one group source into a built group and a display name.
fn resolve_group(source: &SourceArgs, budgets: &Budgets) -> Result<(Group, String), Failure> {
    let mut chosen = 0;
    for set in [
        source.group.is_some(),
        source.table.is_some(),
        source.perms.is_some(),
    ] {
        if set {
            chosen += 1;
        }
    }
    if chosen != 1 {
        return Err(Failure::Usage(
            "exactly one of --group, --table, --perms is required".to_string(),
        ));
    }
    if let Some(expr_text) = &source.group {
        let expr = parse_group_expr(expr_text).map_err(|e| Failure::Parse(e.to_string()))?;
        let group = expr
            .build(budgets.order_cap)
            .map_err(|e| Failure::Parse(e.to_string()))?;
        return Ok((group, expr.to_string()));
    }
    if let Some(path) = &source.table {
        let text = read_file(path)?;
        let group = parse_cayley_file(&text).map_err(|e| Failure::Parse(e.to_string()))?;
        return Ok((group, display_name(path)));
    }
    let path = source.perms.as_ref().unwrap();
    let text = read_file(path)?;
    let group = parse_perm_gens_capped(&text, budgets.order_cap)
        .map_err(|e| Failure::Parse(e.to_string()))?;
    Ok((group, display_name(path)))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn display_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn subgroups_of(g: &Group, budgets: &Budgets) -> Result<Vec<SubgroupInfo>, Failure> {
    enumerate_subgroups(g, budgets.enumeration_cap, budgets.deadline())
        .map_err(classify_group_error)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

/// Renders rows as a left-aligned table with two-space gutters.
fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut text = String::new();
    let emit = |text: &mut String, cells: &[String]| {
        for (i, cell) in cells.iter().enumerate() {
            if i + 1 == cols {
                text.push_str(cell);
            } else {
                text.push_str(&format!("{cell:<width$}  ", width = widths[i]));
            }
        }
        while text.ends_with(' ') {
            text.pop();
        }
        text.push('\n');
    };
    emit(&mut text, &headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in rows {
        emit(&mut text, row);
    }
    text
}

#[derive(Serialize)]
struct SubgroupJson {
    id: usize,
    order: usize,
    elements: Vec<String>,
    abelian: bool,
    normal: bool,
    central: bool,
}

fn cmd_subgroups(args: SubgroupsArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let budgets = args.budget.budgets();
    let (g, name) = resolve_group(&args.source, &budgets)?;
    let subs = subgroups_of(&g, &budgets)?;
    let selected: Vec<&SubgroupInfo> = subs
        .iter()
        .filter(|s| !args.abelian_only || s.is_abelian)
        .collect();
    if args.json {
        let rows: Vec<SubgroupJson> = selected
            .iter()
            .map(|s| SubgroupJson {
                id: s.id,
                order: s.set.len(),
                elements: s.set.names(&g),
                abelian: s.is_abelian,
                normal: s.is_normal,
                central: s.is_central,
            })
            .collect();
        let payload = serde_json::json!({ "group": name, "order": g.order(), "subgroups": rows });
        return write_out(out, &format!("{}\n", serde_json::to_string(&payload).unwrap()));
    }
    let mut text = format!("group {name} (order {})\n", g.order());
    let rows: Vec<Vec<String>> = selected
        .iter()
        .map(|s| {
            vec![
                s.id.to_string(),
                s.set.len().to_string(),
                s.set.render(&g),
                yesno(s.is_abelian),
                yesno(s.is_normal),
                yesno(s.is_central),
            ]
        })
        .collect();
    text.push_str(&render_table(
        &["id", "order", "elements", "abelian", "normal", "central"],
        &rows,
    ));
    write_out(out, &text)
}

fn yesno(b: bool) -> String {
    if b { "yes".to_string() } else { "no".to_string() }
}

fn parse_kind(kind: &str) -> Result<ClassKind, Failure> {
    match kind {
        "self" => Ok(ClassKind::SelfClass),
        "sandwich" => Ok(ClassKind::SandwichClass),
        "conj" => Ok(ClassKind::ConjSelfClass),
        other => Err(Failure::Usage(format!(
            "unknown class kind {other:?}; expected self, sandwich, or conj"
        ))),
    }
}

fn subgroup_by_id(subs: &[SubgroupInfo], id: usize) -> Result<&SubgroupInfo, Failure> {
    subs.get(id).ok_or_else(|| {
        Failure::Usage(format!(
            "subgroup id {id} out of range; the group has {} subgroups",
            subs.len()
        ))
    })
}

fn cmd_classes(args: ClassesArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let budgets = args.budget.budgets();
    let (g, name) = resolve_group(&args.source, &budgets)?;
    let kind = parse_kind(&args.kind)?;
    let subs = subgroups_of(&g, &budgets)?;
    let info = subgroup_by_id(&subs, args.subgroup_id)?;
    let family = class_family(&g, &info.set, kind).map_err(|e| match e {
        GroupError::SelfClassOverNonabelianH => Failure::Usage(e.to_string()),
        other => classify_group_error(other),
    })?;
    if args.json {
        let payload = serde_json::json!({
            "group": name,
            "subgroup_id": info.id,
            "subgroup": info.set.names(&g),
            "kind": kind.to_string(),
            "blocks": family.blocks.iter().map(|b| b.names(&g)).collect::<Vec<_>>(),
            "block_sizes": family.block_sizes(),
            "is_partition": family.is_partition,
            "overlap_witness": family.overlap_witness.map(|(e, a, b)| {
                serde_json::json!({ "element": g.name(e), "block_a": a, "block_b": b })
            }),
            "class_of": family.class_of,
        });
        return write_out(out, &format!("{}\n", serde_json::to_string(&payload).unwrap()));
    }
    let mut text = format!(
        "group {name} (order {}), subgroup {} (id {}), kind {}\n",
        g.order(),
        info.set.render(&g),
        info.id,
        kind
    );
    for (i, b) in family.blocks.iter().enumerate() {
        text.push_str(&format!("block {i}: {} (size {})\n", b.render(&g), b.len()));
    }
    text.push_str(&format!("partition: {}\n", yesno(family.is_partition)));
    if let Some((e, a, b)) = family.overlap_witness {
        text.push_str(&format!(
            "overlap: {} lies in blocks {a} and {b}\n",
            g.name(e)
        ));
    }
    write_out(out, &text)
}

fn cmd_classify(args: ClassifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let budgets = args.budget.budgets();
    let (g, name) = resolve_group(&args.source, &budgets)?;
    let subs = subgroups_of(&g, &budgets)?;
    let verdicts = faithful_subgroups(&g, &subs).map_err(classify_group_error)?;
    let r = is_r_group(&g, &subs, budgets.deadline()).map_err(classify_group_error)?;
    let non_r = is_non_r_group(&g, &subs, budgets.deadline()).map_err(classify_group_error)?;

    if args.json {
        let faithful: Vec<serde_json::Value> = verdicts
            .iter()
            .map(|v| {
                serde_json::json!({
                    "subgroup_id": v.subgroup.id,
                    "elements": v.subgroup.set.names(&g),
                    "faithful": v.faithful,
                    "class_group_order": v.class_group.as_ref().map(|c| c.order()),
                    "refusal": v.refusal.as_ref().map(|r| r.render(&g, &v.family)),
                })
            })
            .collect();
        let payload = serde_json::json!({
            "group": name,
            "order": g.order(),
            "abelian": g.is_abelian(),
            "faithful_subgroups": faithful,
            "r_group": {
                "verdict": r.is_r_group,
                "witness_subgroup": r.witness.as_ref().map(|w| w.subgroup.set.names(&g)),
                "witness_class_group_order": r.witness.as_ref().map(|w| w.class_group.order()),
                "whole_group_class_order": r.whole_group_classes.as_ref().map(|c| c.order()),
            },
            "non_r": {
                "verdict": non_r.is_non_r,
                "witness_subgroup": non_r.witness.as_ref().map(|w| w.subgroup.set.names(&g)),
                "class_group_order": non_r.witness.as_ref().map(|w| w.class_group.order()),
            },
        });
        return write_out(out, &format!("{}\n", serde_json::to_string(&payload).unwrap()));
    }

    let mut text = format!("group {name} (order {}, {})\n", g.order(), if g.is_abelian() { "abelian" } else { "nonabelian" });
    text.push_str("self-class verdicts over abelian subgroups:\n");
    let rows: Vec<Vec<String>> = verdicts
        .iter()
        .map(|v| {
            vec![
                v.subgroup.id.to_string(),
                v.subgroup.set.render(&g),
                if v.faithful { "faithful".to_string() } else { "not faithful".to_string() },
                match (&v.class_group, &v.refusal) {
                    (Some(cg), _) => format!("class group of order {}", cg.order()),
                    (None, Some(r)) => r.render(&g, &v.family),
                    _ => String::new(),
                },
            ]
        })
        .collect();
    text.push_str(&render_table(&["id", "subgroup", "verdict", "detail"], &rows));
    match (&r.witness, &r.whole_group_classes) {
        (Some(w), Some(m)) => text.push_str(&format!(
            "r-group: yes; witness H = {} (id {}), class groups of order {} on both sides\n",
            w.subgroup.set.render(&g),
            w.subgroup.id,
            m.order()
        )),
        (None, Some(m)) => text.push_str(&format!(
            "r-group: no; the sandwich family over the whole group forms a group of order {}, but no abelian subgroup matches it\n",
            m.order()
        )),
        _ => text.push_str(
            "r-group: no; the sandwich family over the whole group does not form a group\n",
        ),
    }
    match &non_r.witness {
        Some(w) => text.push_str(&format!(
            "non-r: yes; witness nonabelian H = {} (id {}), class group of order {}\n",
            w.subgroup.set.render(&g),
            w.subgroup.id,
            w.class_group.order()
        )),
        None => {
            if non_r.refusals.is_empty() {
                text.push_str("non-r: no (the group has no nonabelian subgroup)\n");
            } else {
                text.push_str("non-r: no; every nonabelian subgroup refuses:\n");
                for (info, partition, refusal) in &non_r.refusals {
                    let family = class_family(&g, &info.set, ClassKind::SandwichClass)
                        .expect("already computed once");
                    text.push_str(&format!(
                        "  H = {} (id {}): partition={}, {}\n",
                        info.set.render(&g),
                        info.id,
                        yesno(*partition),
                        refusal.render(&g, &family)
                    ));
                }
            }
        }
    }
    write_out(out, &text)
}

fn parse_claims(arg: &Option<String>) -> Result<Vec<ClaimId>, Failure> {
    match arg {
        None => Ok(ClaimId::ALL.to_vec()),
        Some(list) => {
            let mut out = Vec::new();
            for token in list.split(',') {
                let token = token.trim();
                if token.is_empty() {
                    continue;
                }
                let id = ClaimId::from_code(token).ok_or_else(|| {
                    Failure::Usage(format!(
                        "unknown claim id {token:?}; known ids: {}",
                        ClaimId::ALL.map(|c| c.code()).join(", ")
                    ))
                })?;
                out.push(id);
            }
            if out.is_empty() {
                return Err(Failure::Usage("no claim ids given".to_string()));
            }
            Ok(out)
        }
    }
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let budgets = args.budget.budgets();
    let (g, name) = resolve_group(&args.source, &budgets)?;
    let claims = parse_claims(&args.claims)?;
    let run = run_all_claims(&g, &name, &claims, &budgets).map_err(classify_group_error)?;
    if args.json {
        let payload = serde_json::json!({
            "group": name,
            "truncated": run.truncated,
            "reports": run.reports,
        });
        write_out(out, &format!("{}\n", serde_json::to_string(&payload).unwrap()))?;
    } else {
        let mut text = format!("claim checks for {name} (order {})\n", g.order());
        let rows: Vec<Vec<String>> = run
            .reports
            .iter()
            .map(|r| {
                let mut detail = r.notes.clone();
                if let Some(w) = &r.witness {
                    let rendered = serde_json::to_string(w).unwrap();
                    if detail.is_empty() {
                        detail = format!("witness={rendered}");
                    } else {
                        detail = format!("{detail}; witness={rendered}");
                    }
                }
                vec![
                    r.claim.code().to_string(),
                    r.subgroup
                        .as_ref()
                        .map(|s| format!("{{{}}}", s.join(",")))
                        .unwrap_or_else(|| "-".to_string()),
                    r.second_subgroup
                        .as_ref()
                        .map(|s| format!("{{{}}}", s.join(",")))
                        .unwrap_or_else(|| "-".to_string()),
                    r.status.to_string(),
                    r.lhs.map(|v| v.to_string()).unwrap_or_else(|| "-".to_string()),
                    r.rhs.map(|v| v.to_string()).unwrap_or_else(|| "-".to_string()),
                    detail,
                ]
            })
            .collect();
        text.push_str(&render_table(
            &["claim", "H", "K", "status", "lhs", "rhs", "detail"],
            &rows,
        ));
        if run.truncated {
            text.push_str("warning: run truncated by the time budget\n");
        }
        write_out(out, &text)?;
    }
    if run.truncated {
        return Err(Failure::Budget("claim run truncated".to_string()));
    }
    Ok(())
}

fn cmd_scan(args: ScanArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let mut budgets = Budgets::default();
    if let Some(ms) = args.budget_ms.or_else(|| {
        std::env::var("SCLAB_BUDGET_MS").ok().and_then(|v| v.parse().ok())
    }) {
        budgets.time_budget_ms = ms;
    }
    let claims = parse_claims(&args.claims)?;
    let catalog = build_catalog(args.max_order, &budgets).map_err(classify_group_error)?;
    let report = scan_all(&catalog, &claims, &budgets).map_err(classify_group_error)?;
    persist_report(&report, &args.out)
        .map_err(|e| Failure::Usage(format!("cannot write report: {e}")))?;
    let non_r = report
        .findings
        .iter()
        .filter(|f| f.verdict == Some(crate::report::ScanVerdict::NonR))
        .count();
    let claim_rows = report
        .findings
        .iter()
        .filter(|f| f.kind == crate::report::FindingKind::Claim)
        .count();
    let fails = report.counterexamples().len();
    let budget_hits = report
        .findings
        .iter()
        .filter(|f| {
            f.verdict == Some(crate::report::ScanVerdict::BudgetExceeded)
                || f.status.as_deref() == Some("budget-exceeded")
        })
        .count();
    let mut text = format!(
        "catalog entries: {} (max order {})\nnon-r findings: {non_r}\nclaim reports: {claim_rows} (fails: {fails})\nwrote {}\n",
        catalog.entries.len(),
        catalog.max_order,
        args.out.display()
    );
    if budget_hits > 0 {
        text.push_str(&format!("budget exceeded on {budget_hits} rows\n"));
    }
    write_out(out, &text)?;
    if budget_hits > 0 {
        return Err(Failure::Budget(format!("{budget_hits} rows exceeded their budget")));
    }
    Ok(())
}

fn cmd_compare(args: CompareArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let budgets = args.budget.budgets();
    let (g, name) = resolve_group(&args.source, &budgets)?;
    let subs = subgroups_of(&g, &budgets)?;
    let info = subgroup_by_id(&subs, args.subgroup_id)?;
    let elem = g.index_of(&args.elem).ok_or_else(|| {
        Failure::Usage(format!("unknown element {:?} in {}", args.elem, name))
    })?;
    let cmp = compare_classes(&g, &info.set, elem).map_err(classify_group_error)?;
    if args.json {
        let payload = serde_json::json!({
            "group": name,
            "subgroup_id": info.id,
            "subgroup": info.set.names(&g),
            "element": g.name(elem),
            "sandwich_class": cmp.sandwich.names(&g),
            "conj_self_class": cmp.conj.names(&g),
            "double_coset": cmp.double_coset.names(&g),
            "conjugacy_class": cmp.conjugacy_class.names(&g),
            "equal": {
                "sandwich_vs_conj": cmp.sandwich_eq_conj,
                "sandwich_vs_double_coset": cmp.sandwich_eq_double_coset,
                "sandwich_vs_conjugacy_class": cmp.sandwich_eq_conjugacy_class,
                "conj_vs_double_coset": cmp.conj_eq_double_coset,
                "conj_vs_conjugacy_class": cmp.conj_eq_conjugacy_class,
                "double_coset_vs_conjugacy_class": cmp.double_coset_eq_conjugacy_class,
            },
        });
        return write_out(out, &format!("{}\n", serde_json::to_string(&payload).unwrap()));
    }
    let kind_label = if info.is_abelian { "self-class" } else { "sandwich class" };
    let mut text = format!(
        "group {name}, H = {} (id {}), element {}\n",
        info.set.render(&g),
        info.id,
        g.name(elem)
    );
    text.push_str(&format!("{kind_label}: {}\n", cmp.sandwich.render(&g)));
    text.push_str(&format!("conjugacy self-class: {}\n", cmp.conj.render(&g)));
    text.push_str(&format!("double coset H a H: {}\n", cmp.double_coset.render(&g)));
    text.push_str(&format!("conjugacy class in G: {}\n", cmp.conjugacy_class.render(&g)));
    text.push_str(&format!(
        "sandwich vs double coset: {}\n",
        if cmp.sandwich_eq_double_coset { "equal" } else { "different" }
    ));
    text.push_str(&format!(
        "conj self-class vs conjugacy class: {}\n",
        if cmp.conj_eq_conjugacy_class { "equal" } else { "different" }
    ));
    write_out(out, &text)
}
