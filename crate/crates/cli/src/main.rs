//! `lrpic`: enumerate, map, verify and render Littlewood-Richardson tableaux
//! and admissible pictures.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage errors
//! and malformed input.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lrpic::exec::{with_jobs, Execution};
use lrpic::lr::{
    glmn_lr_tableaux, glr_lr_tableaux, is_glmn_lr_tableau, is_glr_lr_tableau, lr_coefficient_with_order, phi, phi_hat,
    phi_tilde, psi, psi_tilde,
};
use lrpic::picture::{enumerate_pictures, is_admissible_picture, omega};
use lrpic::render::{render, Style};
use lrpic::tableau::{enumerate_glmn, enumerate_ssyt, Entry};
use lrpic::verify::{self, decomposition_glmn_sweep, decomposition_glr_sweep, hook_triples, triples, TripleReport};
use lrpic::{AdmissibleOrder, Cell, OrderSpec, Partition, Picture, SkewShape, Tableau};

#[derive(Parser)]
#[command(name = "lrpic", version, about = "Admissible pictures and Littlewood-Richardson tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print c and N for a triple and whether they agree.
    Coeff(CoeffArgs),
    /// List tableaux or pictures, one JSON object per line.
    Enumerate(EnumerateArgs),
    /// Apply one of the maps to a JSON tableau or picture.
    Map(MapArgs),
    /// Run a verification sweep.
    Verify(VerifyArgs),
    /// Draw a JSON tableau as a grid.
    Render(RenderArgs),
}

/// Partitions are written `5,2,1`; the empty partition is `0` or ``.
fn parse_partition(s: &str) -> Result<Partition, String> {
    let rows = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| format!("bad row length {t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(rows).map_err(|e| e.to_string())
}

#[derive(Args, Clone, Default)]
struct TripleFlags {
    #[arg(long, value_parser = parse_partition)]
    y: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    w: Option<Partition>,
    /// Inner diagram of a skew W (only for `enumerate lrglr|pictures`).
    #[arg(long, value_parser = parse_partition)]
    w_inner: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    z: Option<Partition>,
}

impl TripleFlags {
    fn y(&self) -> Partition {
        self.y.clone().unwrap_or_default()
    }

    fn w(&self) -> Result<Partition> {
        self.w.clone().ok_or_else(|| anyhow!("--w is required"))
    }

    fn z(&self) -> Result<Partition> {
        self.z.clone().ok_or_else(|| anyhow!("--z is required"))
    }

    fn w_shape(&self) -> Result<SkewShape> {
        Ok(SkewShape::new(self.w()?, self.w_inner.clone().unwrap_or_default())?)
    }

    fn skew(&self) -> Result<SkewShape> {
        Ok(SkewShape::new(self.z()?, self.y())?)
    }
}

/// `ME`, `FE`, `seed:<n>` or `@file.json` holding a list of `[row,col]`.
fn parse_order(s: &str) -> Result<OrderSpec> {
    match s.strip_prefix('@') {
        Some(path) => {
            let cells: Vec<Cell> = read_json(Path::new(path))?;
            Ok(OrderSpec::Explicit(cells))
        }
        None => Ok(s.parse()?),
    }
}

fn order_or_me(s: &Option<String>) -> Result<OrderSpec> {
    s.as_deref().map(parse_order).transpose().map(|o| o.unwrap_or(OrderSpec::MiddleEastern))
}

fn realize(spec: &OrderSpec, shape: &SkewShape, flag: &str) -> Result<AdmissibleOrder> {
    spec.realize(shape).with_context(|| format!("{flag} {spec} on {shape}"))
}

#[derive(Args)]
struct CoeffArgs {
    #[command(flatten)]
    triple: TripleFlags,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Reading order used on both W and Z/Y.
    #[arg(long)]
    order: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    /// semistandard tableaux of --shape/--inner with entries <= --max-entry
    Ssyt,
    /// gl(m,n)-semistandard tableaux of --shape/--inner
    Glmn,
    /// LR(Y,W)^Z read in --order on Z/Y
    Lr,
    /// B(W)_Y^Z read in --order on W
    Lrglr,
    /// pictures W -> Z/Y (--tilde: Z/Y -> W); --order on the codomain, --order2 on the domain
    Pictures,
}

#[derive(Args)]
struct EnumerateArgs {
    kind: EnumKind,
    #[command(flatten)]
    triple: TripleFlags,
    #[arg(long, value_parser = parse_partition)]
    shape: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    inner: Option<Partition>,
    #[arg(long)]
    max_entry: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    order: Option<String>,
    #[arg(long)]
    order2: Option<String>,
    #[arg(long)]
    tilde: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Phi,
    Psi,
    Phitilde,
    Psitilde,
    Phihat,
    Omega,
}

#[derive(Args)]
struct MapArgs {
    kind: MapKind,
    #[command(flatten)]
    triple: TripleFlags,
    #[arg(long)]
    input: PathBuf,
    /// Order on the codomain side of the picture involved.
    #[arg(long)]
    order: Option<String>,
    /// Order on the domain side of the picture involved.
    #[arg(long)]
    order2: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    Roundtrip,
    OrderIndependence,
    Coefficients,
    DecompositionGlr,
    DecompositionGlmn,
}

#[derive(Args)]
struct VerifyArgs {
    kind: VerifyKind,
    #[arg(long)]
    max_size: usize,
    /// Comma-separated order specs; defaults to ME,FE and three seeded orders.
    #[arg(long)]
    orders: Option<String>,
    /// Base seed of the default seeded orders.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Rank for decomposition-glr.
    #[arg(long, default_value_t = 3)]
    rank: usize,
    /// Print only the summary line.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = RenderMode::Ascii)]
    render: RenderMode,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderMode {
    Ascii,
    Unicode,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("malformed JSON in {}", path.display()))
}

struct Out(io::BufWriter<io::Stdout>);

impl Out {
    fn line<T: Serialize>(&mut self, v: &T) -> Result<()> {
        serde_json::to_writer(&mut self.0, v)?;
        self.0.write_all(b"\n")?;
        Ok(())
    }

    fn text(&mut self, s: &str) -> Result<()> {
        self.0.write_all(s.as_bytes())?;
        Ok(())
    }
}

#[derive(Serialize)]
struct CoeffLine<'a> {
    y: &'a Partition,
    w: &'a Partition,
    z: &'a Partition,
    m: usize,
    n: usize,
    order: String,
    c: usize,
    #[serde(rename = "N")]
    n_super: usize,
    equal: bool,
}

fn coeff(a: &CoeffArgs, out: &mut Out) -> Result<bool> {
    let (y, w, z) = (a.triple.y(), a.triple.w()?, a.triple.z()?);
    let spec = order_or_me(&a.order)?;
    let k = lr_coefficient_with_order(&y, &w, &z, a.m, a.n, &spec)?;
    out.line(&CoeffLine {
        y: &y,
        w: &w,
        z: &z,
        m: a.m,
        n: a.n,
        order: spec.to_string(),
        c: k.c,
        n_super: k.n_super,
        equal: k.agree(),
    })?;
    Ok(k.agree())
}

fn enumerate(a: &EnumerateArgs, out: &mut Out) -> Result<bool> {
    let t = &a.triple;
    let plain_shape = || -> Result<SkewShape> {
        let outer = a.shape.clone().ok_or_else(|| anyhow!("--shape is required"))?;
        Ok(SkewShape::new(outer, a.inner.clone().unwrap_or_default())?)
    };
    match a.kind {
        EnumKind::Ssyt => {
            let max = a.max_entry.ok_or_else(|| anyhow!("--max-entry is required"))?;
            for x in enumerate_ssyt(&plain_shape()?, max) {
                out.line(&x)?;
            }
        }
        EnumKind::Glmn => {
            let (m, n) =
                (a.m.ok_or_else(|| anyhow!("--m is required"))?, a.n.ok_or_else(|| anyhow!("--n is required"))?);
            for x in enumerate_glmn(&plain_shape()?, m, n) {
                out.line(&x)?;
            }
        }
        EnumKind::Lr => {
            let (y, w, z) = (t.y(), t.w()?, t.z()?);
            let order = realize(&order_or_me(&a.order)?, &t.skew()?, "--order")?;
            for x in glmn_lr_tableaux(&y, &w, &z, &order) {
                out.line(&x)?;
            }
        }
        EnumKind::Lrglr => {
            let (y, z) = (t.y(), t.z()?);
            let ws = t.w_shape()?;
            let order = realize(&order_or_me(&a.order)?, &ws, "--order")?;
            let max = a.max_entry.unwrap_or_else(|| ws.num_rows().max(z.num_rows()));
            for x in glr_lr_tableaux(&y, &z, &order, max) {
                out.line(&x)?;
            }
        }
        EnumKind::Pictures => {
            let (ws, skew) = (t.w_shape()?, t.skew()?);
            let (dom, cod) = if a.tilde { (skew, ws) } else { (ws, skew) };
            let order = realize(&order_or_me(&a.order)?, &cod, "--order")?;
            let order2 = realize(&order_or_me(&a.order2)?, &dom, "--order2")?;
            for x in enumerate_pictures(&dom, &cod, &order, &order2) {
                out.line(&x)?;
            }
        }
    }
    Ok(true)
}

/// Report that an input lies outside the domain of a map.
fn reject(msg: impl std::fmt::Display) -> Result<bool> {
    eprintln!("lrpic: {msg}");
    Ok(false)
}

fn map(a: &MapArgs, out: &mut Out) -> Result<bool> {
    let t = &a.triple;
    let spec = order_or_me(&a.order)?;
    let spec2 = order_or_me(&a.order2)?;
    let have_yz = t.z.is_some();
    match a.kind {
        MapKind::Omega => {
            let f: Picture = read_json(&a.input)?;
            out.line(&omega(&f))?;
        }
        MapKind::Phi | MapKind::Phitilde => {
            let f: Picture = read_json(&a.input)?;
            let cod = realize(&spec, f.codomain(), "--order")?;
            let dom = realize(&spec2, f.domain(), "--order2")?;
            if !is_admissible_picture(&f, &cod, &dom)? {
                return reject("input picture is not admissible for the given orders");
            }
            let image = if matches!(a.kind, MapKind::Phi) { phi(&f) } else { phi_tilde(&f) };
            if have_yz {
                let (y, z) = (t.y(), t.z()?);
                let member = match a.kind {
                    MapKind::Phi => is_glr_lr_tableau(&image, &y, &z, &dom)?,
                    _ => is_glmn_lr_tableau(&image, &y, &t.w()?, &z, &dom)?,
                };
                if !member {
                    return reject("image is not an LR tableau of the given triple");
                }
            }
            out.line(&image)?;
        }
        MapKind::Psi => {
            let tab: Tableau = read_json(&a.input)?;
            let (y, z) = (t.y(), t.z()?);
            let on_w = realize(&spec2, tab.shape(), "--order2")?;
            if !is_glr_lr_tableau(&tab, &y, &z, &on_w)? {
                return reject("input is not in B(W)_Y^Z for the given order");
            }
            let f = psi(&tab, &y, &z)?;
            let on_skew = realize(&spec, f.codomain(), "--order")?;
            if !is_admissible_picture(&f, &on_skew, &on_w)? {
                return reject("Ψ(T) is not admissible");
            }
            out.line(&f)?;
        }
        MapKind::Psitilde | MapKind::Phihat => {
            let q: Tableau = read_json(&a.input)?;
            let w = t.w()?;
            let f = psi_tilde(&q, &w)?;
            let on_skew = realize(&spec2, q.shape(), "--order2")?;
            let on_w = realize(&spec, f.codomain(), "--order")?;
            if have_yz {
                if !is_glmn_lr_tableau(&q, &t.y(), &w, &t.z()?, &on_skew)? {
                    return reject("input is not in LR(Y,W)^Z for the given order");
                }
                if !is_admissible_picture(&f, &on_w, &on_skew)? {
                    return reject("Ψ̃(Q) is not admissible");
                }
            }
            if matches!(a.kind, MapKind::Psitilde) {
                out.line(&f)?;
            } else {
                let image = phi_hat(&q, &w)?;
                if have_yz && !is_glr_lr_tableau(&image, &t.y(), &t.z()?, &on_w)? {
                    return reject("Φ̂(Q) is not in B(W)_Y^Z");
                }
                out.line(&image)?;
            }
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct Summary {
    check: &'static str,
    cases: usize,
    failures: usize,
    pass: bool,
}

fn orders_list(a: &VerifyArgs) -> Result<Vec<OrderSpec>> {
    match &a.orders {
        Some(list) => list.split(',').filter(|s| !s.trim().is_empty()).map(|s| parse_order(s.trim())).collect(),
        None => {
            let mut v = vec![OrderSpec::MiddleEastern, OrderSpec::FarEastern];
            v.extend((0..3).map(|k| OrderSpec::Seed(a.seed.wrapping_add(k))));
            Ok(v)
        }
    }
}

fn emit_reports<T: Serialize>(
    check: &'static str,
    reports: &[T],
    ok: impl Fn(&T) -> bool,
    quiet: bool,
    out: &mut Out,
) -> Result<bool> {
    let mut failures = 0;
    for r in reports {
        if !ok(r) {
            failures += 1;
        }
        if !quiet {
            out.line(r)?;
        }
    }
    out.line(&Summary { check, cases: reports.len(), failures, pass: failures == 0 })?;
    Ok(failures == 0)
}

fn verify_cmd(a: &VerifyArgs, out: &mut Out) -> Result<bool> {
    let orders = orders_list(a)?;
    if orders.is_empty() {
        bail!("--orders is empty");
    }
    let exec = Execution::Parallel;
    with_jobs(a.jobs, || -> Result<bool> {
        match a.kind {
            VerifyKind::Roundtrip | VerifyKind::OrderIndependence => {
                let ts: Vec<_> = triples(a.max_size, |_| true).into_iter().filter(|t| t.is_skew()).collect();
                let reports = verify::sweep(&ts, 0, 0, &orders, exec)?;
                if a.kind == VerifyKind::Roundtrip {
                    emit_reports("roundtrip", &reports, |r: &TripleReport| r.roundtrip_ok, a.quiet, out)
                } else {
                    let ok = |r: &TripleReport| r.order_independent && r.set_identity_ok;
                    emit_reports("order-independence", &reports, ok, a.quiet, out)
                }
            }
            VerifyKind::Coefficients => {
                let ts: Vec<_> = hook_triples(a.m, a.n, a.max_size).into_iter().filter(|t| t.is_skew()).collect();
                let reports = verify::sweep(&ts, a.m, a.n, &orders, exec)?;
                emit_reports("coefficients", &reports, TripleReport::coefficients_agree, a.quiet, out)
            }
            VerifyKind::DecompositionGlr => {
                let reports = decomposition_glr_sweep(a.max_size, a.rank, exec)?;
                emit_reports("decomposition-glr", &reports, |r| r.report.pass, a.quiet, out)
            }
            VerifyKind::DecompositionGlmn => {
                let reports = decomposition_glmn_sweep(a.max_size, a.m, a.n, exec)?;
                emit_reports("decomposition-glmn", &reports, |r| r.report.pass, a.quiet, out)
            }
        }
    })
}

fn render_cmd(a: &RenderArgs, out: &mut Out) -> Result<bool> {
    let t: Tableau<Entry> = read_json(&a.input)?;
    let style = match a.render {
        RenderMode::Ascii => Style::Ascii,
        RenderMode::Unicode => Style::Unicode,
    };
    out.text(&render(&t, style))?;
    Ok(true)
}

fn run(cli: &Cli, out: &mut Out) -> Result<bool> {
    match &cli.command {
        Command::Coeff(a) => coeff(a, out),
        Command::Enumerate(a) => enumerate(a, out),
        Command::Map(a) => map(a, out),
        Command::Verify(a) => verify_cmd(a, out),
        Command::Render(a) => render_cmd(a, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let mut out = Out(io::BufWriter::new(io::stdout()));
    let result = run(&cli, &mut out);
    let flushed = out.0.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (Err(e), _) => {
            eprintln!("lrpic: {e:#}");
            ExitCode::from(2)
        }
        (_, Err(e)) => {
            eprintln!("lrpic: writing output: {e}");
            ExitCode::from(2)
        }
    }
}
