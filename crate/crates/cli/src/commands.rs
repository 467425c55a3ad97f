use std::fs;
use std::path::{Path, PathBuf};

use gemkit::moves::{
    cancel_dipole, connected_sum, dipole_at, find_dipoles, graph_fingerprint, insert_dipole, iso_check, replay,
    rho1_pipeline, rho_pair_at, switch_rho_pair, Attachment, MoveKind, MoveRecord, SwitchVariant,
};
use gemkit::{
    betti_lower_bound, classify, condition_star, euler_characteristic, kirby_bounds, orientability, parse,
    regular_genus_all, regular_genus_min, residues, rho_hat4_all, serialize, trisection_genus_bound_closed,
    trisection_reports, z2_betti, Color, ColorSet, ColoredGraph, CyclicPermutation, HalfInteger, KirbyBoundInput,
};
use serde::Serialize;
use serde_json::json;

use crate::output::{CliError, Success};
use crate::{Command, GenusArgs, MovesCommand, Output};

type Outcome = Result<Success, CliError>;

pub fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Validate { .. } => "validate",
        Command::Info { .. } => "info",
        Command::Genus(_) => "genus",
        Command::Trisect { .. } => "trisect",
        Command::Bounds(_) => "bounds",
        Command::Iso { .. } => "iso",
        Command::Moves(m) => match m {
            MovesCommand::RhoList { .. } => "moves rho-list",
            MovesCommand::RhoSwitch { .. } => "moves rho-switch",
            MovesCommand::DipoleList { .. } => "moves dipole-list",
            MovesCommand::DipoleCancel { .. } => "moves dipole-cancel",
            MovesCommand::DipoleInsert { .. } => "moves dipole-insert",
            MovesCommand::Consum { .. } => "moves consum",
            MovesCommand::Pipeline { .. } => "moves pipeline",
            MovesCommand::Replay { .. } => "moves replay",
        },
    }
}

pub fn run(cmd: &Command) -> Outcome {
    match cmd {
        Command::Validate { path } => validate(path),
        Command::Info { path } => info(path),
        Command::Genus(args) => genus(args),
        Command::Trisect { path, m } => trisect(path, *m),
        Command::Bounds(b) => bounds(&KirbyBoundInput { s: b.s, c: b.c, m_alpha: b.m_alpha, has_dotted: b.dotted }),
        Command::Iso { first, second, colors } => iso(first, second, *colors),
        Command::Moves(m) => moves(m),
    }
}

fn load(path: &Path) -> Result<ColoredGraph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::invalid("io", format!("{}: {e}", path.display())))?;
    Ok(parse(&text)?)
}

fn display(path: &Path) -> String {
    path.display().to_string()
}

fn validate(path: &Path) -> Outcome {
    let g = load(path)?;
    Ok(Success::new(json!({
        "valid": true,
        "dim": g.dim(),
        "order": g.order(),
        "connected": g.is_connected(),
    })))
}

#[derive(Serialize)]
struct PairCount {
    colors: (Color, Color),
    count: usize,
}

#[derive(Serialize)]
struct Info {
    dim: usize,
    order: usize,
    connected: bool,
    bipartite: bool,
    /// `g_ĉ` per color.
    residue_counts: Vec<usize>,
    bicolored_counts: Vec<PairCount>,
    crystallization: bool,
    euler_characteristic: Option<i64>,
    betti: Option<gemkit::BettiVector>,
    orientability: Option<gemkit::Orientability>,
    classification: Option<gemkit::GemClassification>,
}

fn info(path: &Path) -> Outcome {
    let g = load(path)?;
    let connected = g.is_connected();
    let residue_counts: Vec<usize> = (0..g.num_colors()).map(|c| gemkit::residue::hat_count(&g, c)).collect();
    let counts = gemkit::residue::bicolored_counts(&g);
    let mut bicolored_counts = Vec::new();
    for a in 0..g.num_colors() {
        for b in a + 1..g.num_colors() {
            bicolored_counts.push(PairCount { colors: (a, b), count: counts[a][b] });
        }
    }
    let mut report = Info {
        dim: g.dim(),
        order: g.order(),
        connected,
        bipartite: g.is_bipartite_graph(),
        crystallization: connected && residue_counts.iter().all(|&k| k == 1),
        residue_counts,
        bicolored_counts,
        euler_characteristic: None,
        betti: None,
        orientability: None,
        classification: None,
    };
    if !connected {
        let partial = serde_json::to_value(&report).expect("payload serializes");
        return Err(CliError::invalid("disconnected", "graph is disconnected: Euler characteristic, homology and classification are undefined")
            .with_partial(partial));
    }
    report.euler_characteristic = Some(euler_characteristic(&g)?);
    report.betti = Some(z2_betti(&g)?);
    report.orientability = Some(orientability(&g)?);
    let mut s;
    if g.dim() == 4 {
        report.classification = Some(classify(&g)?);
        s = Success::new(&report);
    } else {
        s = Success::new(&report);
        s = s.note("note", "classification is only defined in dimension 4");
    }
    if let Some(cls) = &report.classification {
        if !cls.singular_color_candidates.is_empty() {
            s = s.note(
                "note",
                format!("residues of colors {} are not certified as spheres", cls.singular_color_candidates),
            );
        }
    }
    Ok(s)
}

#[derive(Serialize)]
struct GenusRow {
    permutation: Vec<Color>,
    rho: HalfInteger,
}

fn genus(args: &GenusArgs) -> Outcome {
    let g = load(&args.path)?;
    let (target, labels): (ColoredGraph, Vec<Color>) = match args.residue {
        None => (g.clone(), (0..g.num_colors()).collect()),
        Some(c) => {
            if c > g.dim() {
                return Err(CliError::usage(format!("color {c} out of range")));
            }
            let colors = g.all_colors().without(c);
            let rs = residues(&g, colors)?;
            if rs.len() != 1 {
                return Err(CliError::invalid("residue", format!("the graph has {} residues missing color {c}", rs.len())));
            }
            (rs[0].induced_graph(&g), colors.iter().collect())
        }
    };
    if target.dim() < 1 {
        return Err(CliError::invalid("dimension", "regular genus needs at least two colors"));
    }
    let relabel = |e: &CyclicPermutation| e.as_slice().iter().map(|&c| labels[c]).collect::<Vec<_>>();
    let base = json!({
        "target": if args.residue.is_some() { "residue" } else { "graph" },
        "missing_color": args.residue,
        "colors": labels,
        "order": target.order(),
        "bipartite": target.is_bipartite_graph(),
    });
    let mut payload = base;
    if args.all {
        let rows: Vec<GenusRow> = regular_genus_all(&target)?
            .iter()
            .map(|(e, rho)| GenusRow { permutation: relabel(e), rho: *rho })
            .collect();
        payload["rows"] = serde_json::to_value(rows).unwrap();
    } else {
        let (rho, witness) = regular_genus_min(&target)?;
        payload["min"] = serde_json::to_value(rho).unwrap();
        payload["witness"] = serde_json::to_value(relabel(&witness)).unwrap();
    }
    Ok(Success::new(payload))
}

#[derive(Serialize)]
struct BoundWitness {
    value: HalfInteger,
    witness: Vec<Color>,
}

#[derive(Serialize)]
struct StarVerdict {
    holds: bool,
    ordering: Option<Vec<StarStep>>,
}

#[derive(Serialize)]
struct StarStep {
    edge: (usize, usize),
    witness: Color,
}

#[derive(Serialize)]
struct Trisect {
    crystallization: bool,
    bipartite: bool,
    closed: bool,
    singular_color_candidates: ColorSet,
    condition_star: StarVerdict,
    verdict: &'static str,
    rho_hat4: Vec<GenusRow>,
    reports: Vec<gemkit::TrisectionReport>,
    ggt_upper_bound: Option<BoundWitness>,
    closed_manifold_bound: Option<HalfInteger>,
    betti_lower_bound: Option<HalfInteger>,
}

fn trisect(path: &Path, m: Option<usize>) -> Outcome {
    let g = load(path)?;
    if g.dim() != 4 {
        return Err(gemkit::Error::WrongDimension { expected: 4, found: g.dim() }.into());
    }
    if !g.is_connected() {
        return Err(gemkit::Error::Disconnected.into());
    }
    let cls = classify(&g)?;
    if !cls.in_class_gs {
        let partial = serde_json::to_value(&cls).unwrap();
        return Err(CliError::from(gemkit::Error::NotInClassGs(if cls.residue_counts[4] != 1 {
            format!("{} residues of color 4̂", cls.residue_counts[4])
        } else {
            format!("residues of colors {} are not certified as 3-spheres", cls.singular_color_candidates)
        }))
        .with_partial(json!({ "classification": partial })));
    }
    let star = condition_star(&g)?;
    let rho_hat4: Vec<GenusRow> = rho_hat4_all(&g)?
        .iter()
        .map(|(e, r)| GenusRow { permutation: e.as_slice().to_vec(), rho: *r })
        .collect();
    let closed = cls.is_closed_certified();
    let betti = if closed { Some(betti_lower_bound(&g)?) } else { None };
    let mut s;
    let report = if let Some(order) = &star {
        let reports = trisection_reports(&g)?;
        let best = reports.iter().min_by(|a, b| a.rho_hat4.cmp(&b.rho_hat4)).unwrap();
        let closed_manifold_bound = match m {
            Some(m) => Some(trisection_genus_bound_closed(&g, m)?),
            None if closed => Some(best.rho_hat4),
            None => None,
        };
        Trisect {
            crystallization: cls.crystallization,
            bipartite: cls.bipartite,
            closed,
            singular_color_candidates: cls.singular_color_candidates,
            condition_star: StarVerdict {
                holds: true,
                ordering: Some(
                    order.edges.iter().zip(&order.witnesses).map(|(&edge, &witness)| StarStep { edge, witness }).collect(),
                ),
            },
            verdict: "bound",
            ggt_upper_bound: Some(BoundWitness { value: best.ggt_upper_bound, witness: best.permutation.clone() }),
            rho_hat4,
            reports,
            closed_manifold_bound,
            betti_lower_bound: betti,
        }
    } else {
        Trisect {
            crystallization: cls.crystallization,
            bipartite: cls.bipartite,
            closed,
            singular_color_candidates: cls.singular_color_candidates,
            condition_star: StarVerdict { holds: false, ordering: None },
            verdict: "no bound from this gem",
            rho_hat4,
            reports: Vec::new(),
            ggt_upper_bound: None,
            closed_manifold_bound: None,
            betti_lower_bound: betti,
        }
    };
    s = Success::new(&report);
    if star.is_none() {
        s = s.note("note", "condition (*) fails: no ordering of the 4-colored edges exists");
    }
    if !closed {
        s = s.note("note", "color 4 is not certified, so the Betti lower bound does not apply");
    }
    if let (Some(lo), Some(hi)) = (report.betti_lower_bound, report.closed_manifold_bound) {
        if lo > hi {
            return Err(CliError::internal("assertion", format!("lower bound {lo} exceeds upper bound {hi}")));
        }
    }
    Ok(s)
}

fn bounds(input: &KirbyBoundInput) -> Outcome {
    let b = kirby_bounds(input)?;
    let warnings = b.warnings.clone();
    let mut s = Success::new(json!({
        "input": { "s": input.s, "c": input.c, "m_alpha": input.m_alpha, "dotted": input.has_dotted },
        "bounds": b.bounds,
        "best": b.best,
    }));
    for w in warnings {
        s = s.note("warning", w);
    }
    Ok(s)
}

fn iso(first: &Path, second: &Path, colors: bool) -> Outcome {
    let (g, h) = (load(first)?, load(second)?);
    let found = iso_check(&g, &h, colors);
    Ok(Success::new(json!({ "isomorphic": found.is_some(), "isomorphism": found })))
}

// Moves.

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>, CliError> {
    if text.trim() == "-" || text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| CliError::usage(format!("bad {what} `{t}`"))))
        .collect()
}

fn parse_colors(text: &str) -> Result<ColorSet, CliError> {
    let v = parse_list(text, "color")?;
    if v.iter().any(|&c| c >= 32) {
        return Err(CliError::usage("color out of range"));
    }
    Ok(v.into_iter().collect())
}

fn parse_attachments(text: &str) -> Result<Vec<Attachment>, CliError> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let parts: Vec<&str> = t.trim().split(':').collect();
            let nums: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
            match nums.as_deref() {
                Some(&[color, x, y]) => Ok(Attachment { color, x, y }),
                _ => Err(CliError::usage(format!("bad attachment `{t}`, expected color:x:y"))),
            }
        })
        .collect()
}

/// `dir/name.gem` becomes `dir/name.<kind>1.gem`; an existing
/// `.<kind>k` suffix is bumped to `k+1`.
pub fn suffixed(input: &Path, kind: &str) -> PathBuf {
    let file = input.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    let stem = file.strip_suffix(".gem").unwrap_or(&file);
    let (base, next) = match stem.rsplit_once('.') {
        Some((b, last)) if last.starts_with(kind) && last[kind.len()..].parse::<usize>().is_ok() => {
            (b.to_string(), last[kind.len()..].parse::<usize>().unwrap() + 1)
        }
        _ => (stem.to_string(), 1),
    };
    input.with_file_name(format!("{base}.{kind}{next}.gem"))
}

fn log_path(output: &Path) -> PathBuf {
    output.with_extension("moves")
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::invalid("io", format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct Written {
    output: String,
    log: String,
    order: usize,
    fingerprint: String,
}

/// Writes the result graph and a log holding `records` after a header naming
/// the start graph.
fn emit(start: &Path, start_graph: &ColoredGraph, output: &Path, g: &ColoredGraph, records: &[MoveRecord]) -> Result<Written, CliError> {
    write_file(output, &serialize(g))?;
    let mut log = format!(
        "# start {} order={} fp={}\n",
        start.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default(),
        start_graph.order(),
        graph_fingerprint(start_graph)
    );
    for r in records {
        log.push_str(&r.to_string());
        log.push('\n');
    }
    let lp = log_path(output);
    write_file(&lp, &log)?;
    Ok(Written { output: display(output), log: display(&lp), order: g.order(), fingerprint: graph_fingerprint(g) })
}

fn out_path(out: &Output, input: &Path, kind: &str) -> PathBuf {
    out.output.clone().unwrap_or_else(|| suffixed(input, kind))
}

fn moves(cmd: &MovesCommand) -> Outcome {
    match cmd {
        MovesCommand::RhoList { path, color, involved, exact } => {
            let g = load(path)?;
            let required = match involved {
                Some(t) => parse_colors(t)?,
                None => ColorSet::EMPTY,
            };
            let mut pairs = gemkit::moves::find_rho_pairs(&g, *color, required)?;
            if *exact {
                pairs.retain(|p| p.involved == required);
            }
            let rows: Vec<_> = pairs
                .iter()
                .map(|p| json!({ "e": p.e, "f": p.f, "involved": p.involved, "h": p.h() }))
                .collect();
            Ok(Success::new(json!({ "color": color, "required": required, "exact": exact, "count": rows.len(), "pairs": rows })))
        }
        MovesCommand::RhoSwitch { path, color, at, variant, out } => {
            let g = load(path)?;
            let v = parse_list(at, "vertex")?;
            let [x, y] = v[..] else {
                return Err(CliError::usage("--at takes two vertices x,y"));
            };
            let variant: SwitchVariant = variant.parse().map_err(CliError::usage)?;
            let p = rho_pair_at(&g, *color, x, y)?;
            let r = switch_rho_pair(&g, &p, variant)?;
            let kind = MoveKind::RhoSwitch {
                color: *color,
                e: p.e,
                f: p.f,
                involved: p.involved,
                variant,
                pairing: r.pairing,
                rule: r.rule,
            };
            let rec = MoveRecord::new(kind, &r.graph, None);
            let written = emit(path, &g, &out_path(out, path, "switch"), &r.graph, std::slice::from_ref(&rec))?;
            let mut s = Success::new(json!({
                "pair": { "e": p.e, "f": p.f, "involved": p.involved, "h": p.h() },
                "variant": variant.to_string(),
                "pairing": r.pairing.to_string(),
                "rule": r.rule.to_string(),
                "record": rec.to_string(),
                "result": written,
            }));
            if r.rule == gemkit::moves::SwitchRule::DefaultA {
                s = s.note("warning", "no bipartite residue constrains the switch; variant A was used");
            }
            Ok(s)
        }
        MovesCommand::DipoleList { path, size } => {
            let g = load(path)?;
            let sizes: Vec<usize> = match size {
                Some(h) => vec![*h],
                None => (1..=g.dim()).collect(),
            };
            let mut all = Vec::new();
            for h in sizes {
                all.extend(find_dipoles(&g, h)?);
            }
            let proper = all.iter().filter(|d| d.proper).count();
            Ok(Success::new(json!({ "count": all.len(), "proper": proper, "dipoles": all })))
        }
        MovesCommand::DipoleCancel { path, u, v, out } => {
            let g = load(path)?;
            let d = dipole_at(&g, *u, *v)?;
            let h = cancel_dipole(&g, &d)?;
            let rec = MoveRecord::new(MoveKind::DipoleCancel { u: d.u, v: d.v, colors: d.colors }, &h, None);
            let written = emit(path, &g, &out_path(out, path, "cancel"), &h, std::slice::from_ref(&rec))?;
            Ok(Success::new(json!({ "dipole": d, "record": rec.to_string(), "result": written })))
        }
        MovesCommand::DipoleInsert { path, colors, attach, out } => {
            let g = load(path)?;
            let colors = parse_colors(colors)?;
            let attachments = parse_attachments(attach)?;
            let (h, d) = insert_dipole(&g, colors, &attachments)?;
            let rec = MoveRecord::new(MoveKind::DipoleInsert { colors, attachments }, &h, None);
            let written = emit(path, &g, &out_path(out, path, "insert"), &h, std::slice::from_ref(&rec))?;
            let mut s = Success::new(json!({ "dipole": d, "record": rec.to_string(), "result": written }));
            if !d.proper {
                s = s.note("warning", "the inserted dipole is not proper; the represented space may have changed");
            }
            Ok(s)
        }
        MovesCommand::Consum { first, second, v1, v2, out } => {
            let (g1, g2) = (load(first)?, load(second)?);
            let sum = connected_sum(&g1, *v1, &g2, *v2)?;
            let output = out_path(out, first, "consum");
            let operand = operand_name(second, &output);
            let rec = MoveRecord::new(MoveKind::ConnectedSum { v1: *v1, operand, v2: *v2 }, &sum, None);
            let written = emit(first, &g1, &output, &sum, std::slice::from_ref(&rec))?;
            Ok(Success::new(json!({ "record": rec.to_string(), "result": written })))
        }
        MovesCommand::Pipeline { path, color, m, out } => pipeline(path, *color, *m, out),
        MovesCommand::Replay { path, log, out } => {
            let g = load(path)?;
            let text = fs::read_to_string(log).map_err(|e| CliError::invalid("io", format!("{}: {e}", log.display())))?;
            let base = log.parent().map(Path::to_path_buf).unwrap_or_default();
            let resolve = |name: &str| -> gemkit::Result<ColoredGraph> {
                let p = if Path::new(name).is_absolute() { PathBuf::from(name) } else { base.join(name) };
                let text = fs::read_to_string(&p).map_err(|e| gemkit::Error::InvalidInput(format!("{}: {e}", p.display())))?;
                parse(&text).map_err(|e| gemkit::Error::InvalidInput(format!("{}: {e}", p.display())))
            };
            check_log_header(&text, &g)?;
            let graphs = replay(&g, &text, &resolve)?;
            let last = graphs.last().unwrap();
            if let Some(o) = &out.output {
                write_file(o, &serialize(last))?;
            }
            Ok(Success::new(json!({
                "moves": graphs.len() - 1,
                "order": last.order(),
                "fingerprint": graph_fingerprint(last),
                "output": out.output.as_deref().map(display),
            })))
        }
    }
}

/// The start header, when present, must match the graph being replayed.
fn check_log_header(log: &str, g: &ColoredGraph) -> Result<(), CliError> {
    let Some(first) = log.lines().next() else { return Ok(()) };
    let Some(rest) = first.strip_prefix("# start ") else { return Ok(()) };
    if let Some(fp) = rest.split_whitespace().find_map(|t| t.strip_prefix("fp=")) {
        if fp != graph_fingerprint(g) {
            return Err(CliError::invalid(
                "replay",
                format!("log starts from fingerprint {fp}, the given graph has {}", graph_fingerprint(g)),
            ));
        }
    }
    Ok(())
}

/// The name under which a connected-sum operand is recorded: relative to
/// the output's directory when it lives there, otherwise absolute.
fn operand_name(operand: &Path, output: &Path) -> String {
    let dir = output.parent().unwrap_or(Path::new(""));
    if operand.parent().unwrap_or(Path::new("")) == dir {
        if let Some(f) = operand.file_name() {
            return f.to_string_lossy().into_owned();
        }
    }
    fs::canonicalize(operand).map(|p| display(&p)).unwrap_or_else(|_| display(operand))
}

fn pipeline(path: &Path, color: Color, m: usize, out: &Output) -> Outcome {
    let g = load(path)?;
    let outcome = rho1_pipeline(&g, color, m)?;
    // Intermediate graphs are written only with default naming.
    let mut step_files = Vec::new();
    let final_path = match &out.output {
        Some(o) => o.clone(),
        None => {
            let mut cur = g.clone();
            let mut p = path.to_path_buf();
            for step in &outcome.steps[..outcome.steps.len() - 1] {
                let MoveKind::RhoSwitch { color, e, f, variant, .. } = &step.record.kind else { unreachable!() };
                let pair = rho_pair_at(&cur, *color, e.0, f.0)?;
                debug_assert_eq!(pair.f, *f);
                cur = switch_rho_pair(&cur, &pair, *variant)?.graph;
                p = suffixed(&p, "switch");
                write_file(&p, &serialize(&cur))?;
                step_files.push(display(&p));
            }
            suffixed(&p, "switch")
        }
    };
    let records: Vec<MoveRecord> = outcome.steps.iter().map(|s| s.record.clone()).collect();
    let written = emit(path, &g, &final_path, &outcome.graph, &records)?;
    step_files.push(written.output.clone());
    let mut payload = serde_json::to_value(&outcome).unwrap();
    payload["result"] = serde_json::to_value(&written).unwrap();
    payload["step_files"] = serde_json::to_value(&step_files).unwrap();
    let mut s = Success::new(payload);
    if let Some(reason) = &outcome.unavailable_reason {
        s = s.note("note", format!("no bound: {reason}"));
    }
    if !outcome.boundary_rho_equals_m {
        s = s.note("note", format!("boundary regular genus {} differs from m = {m}", outcome.boundary_rho));
    }
    Ok(s)
}
