//! The `wcurve` command line: semigroup reports, curve pipelines and fixture
//! spec files.

pub mod spec;
pub mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num::One;
use serde_json::{json, Value};
use wcurve::curve::{fixture_names, CurveAlgebra, CurveError, TraceKit, YhatMode};
use wcurve::exactalg::fmt_rat;
use wcurve::monomial::trace_monomials;
use wcurve::semigroup::SemigroupError;
use wcurve::NumericalSemigroup;

pub use spec::CurveSpec;

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code when a verification fails.
pub const EXIT_VERIFY: i32 = 1;
/// Exit code for unreadable or invalid input.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("verification failed: {0}")]
    Verify(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verify(_) => EXIT_VERIFY,
            _ => EXIT_INPUT,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "wcurve", version, about = "Exact computations for pointed Weierstrass curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gaps, standard basis, Young diagram and monomial trace table of a semigroup.
    Semigroup {
        #[arg(required = true)]
        generators: Vec<u64>,
        /// Trace degree to tabulate (default: the minimal valid one).
        #[arg(long)]
        dh: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Runs the curve pipeline on a spec file.
    Curve {
        spec: PathBuf,
        action: CurveAction,
        /// Series order for `expand` and `verify`.
        #[arg(long)]
        order: Option<usize>,
        /// Numerical tolerance for `verify`.
        #[arg(long)]
        tol: Option<f64>,
        /// Seed for random evaluation points.
        #[arg(long)]
        seed: Option<u64>,
        /// Forces the trace degree (must be valid for the semigroup).
        #[arg(long)]
        dh: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Lists or emits the built-in example curves.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CurveAction {
    Check,
    Trace,
    Differentials,
    Expand,
    Verify,
}

#[derive(Subcommand, Debug)]
pub enum FixturesAction {
    List,
    Emit { name: String },
}

/// Captured result of one invocation.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

pub fn execute(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Semigroup { generators, dh, json } => cmd_semigroup(&generators, dh, json).map(|s| (s, EXIT_OK)),
        Command::Curve { spec, action, order, tol, seed, dh, json } => {
            let text = std::fs::read_to_string(&spec).map_err(|e| CliError::Input(format!("{}: {e}", spec.display())));
            text.and_then(|t| CurveSpec::parse(&t)).and_then(|s| {
                let opts = RunOptions {
                    order: order.or(s.options.series_order),
                    tol: tol.or(s.options.tolerance).unwrap_or(1e-8),
                    seed: seed.or(s.options.seed).unwrap_or(0),
                    dh: dh.or(s.options.dh_override),
                    json,
                };
                cmd_curve(&s, action, &opts)
            })
        }
        Command::Fixtures { action } => cmd_fixtures(&action).map(|s| (s, EXIT_OK)),
    };
    match result {
        Ok((stdout, code)) => Outcome { stdout, stderr: String::new(), code },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}

/// Options shared by the curve actions.
#[derive(Clone, Debug)]
pub struct RunOptions {
    pub order: Option<usize>,
    pub tol: f64,
    pub seed: u64,
    pub dh: Option<u64>,
    pub json: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { order: None, tol: 1e-8, seed: 0, dh: None, json: false }
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn angle(gens: &[u64]) -> String {
    format!("<{}>", gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(","))
}

/// `sum_j (r/gcd(r, r_j) - 1) r_j mod r` over the generators other than `r`.
pub fn trace_congruence(h: &NumericalSemigroup) -> u64 {
    let r = h.r();
    h.generators().iter().skip(1).map(|&g| (r / num::integer::gcd(r, g) - 1) * g).sum::<u64>() % r
}

/// Young diagram rows, longest first, drawn with `[]` boxes.
pub fn young_ascii(rows: &[u64]) -> String {
    let mut out = String::new();
    for len in rows.iter().rev() {
        out.push_str(&"[]".repeat(*len as usize));
        out.push('\n');
    }
    out
}

pub fn cmd_semigroup(generators: &[u64], dh: Option<u64>, as_json: bool) -> Result<String, CliError> {
    let h = NumericalSemigroup::new(generators)?;
    let report = h.report();
    let dmin = h.minimal_valid_trace_degree();
    let d = dh.unwrap_or(dmin);
    let mono = trace_monomials(&h, d)?;
    let r = h.r();
    let congruence = trace_congruence(&h);
    let next = (dmin + 1..).find(|&k| h.is_valid_trace_degree(k)).expect("large degrees are valid");
    let note = (!h.is_symmetric()).then(|| {
        format!(
            "note: H is not symmetric, so the monomial data do not fix d_h: the minimal valid trace degree is {dmin} and {next} is also valid. The curve-level d_h comes from the annihilator solve; use --dh to tabulate another degree. (sum (r_j' - 1) r_j = {congruence} mod {r})"
        )
    });
    if as_json {
        let v = json!({
            "semigroup": report,
            "minimal_valid_trace_degree": dmin,
            "trace_degree": d,
            "trace_congruence": congruence,
            "monomial_trace": mono,
            "monomial_trace_rendered": mono.render(&h),
            "note": note,
        });
        return Ok(serde_json::to_string_pretty(&v).expect("json") + "\n");
    }
    let mut s = String::new();
    writeln!(s, "semigroup {}", angle(h.generators())).unwrap();
    writeln!(s, "gaps: {{{}}}", join(&report.gaps)).unwrap();
    writeln!(s, "genus: {}", report.genus).unwrap();
    writeln!(s, "conductor: {}", report.conductor).unwrap();
    writeln!(s, "symmetric: {}", if report.symmetric { "yes" } else { "no" }).unwrap();
    writeln!(s, "standard basis e: {}", join(&report.standard_basis)).unwrap();
    writeln!(s, "Schubert index: ({})", join(&report.schubert)).unwrap();
    writeln!(s, "Young diagram:").unwrap();
    s.push_str(&young_ascii(&report.young));
    writeln!(s, "minimal valid trace degree: {dmin}").unwrap();
    writeln!(s, "trace degree d_h = {d}{}, l = {}", if dh.is_some() { " (forced)" } else { "" }, mono.ell).unwrap();
    writeln!(s, "{:>3} {:>5} {:>5} {:>5}", "i", "e_i", "e^_i", "delta").unwrap();
    for i in 0..h.e().len() {
        writeln!(s, "{:>3} {:>5} {:>5} {:>5}", i, h.e()[i], mono.ehat[i], mono.delta[i]).unwrap();
    }
    writeln!(s, "e^ row: {{{}}}", join(&mono.ehat)).unwrap();
    writeln!(s, "monomial trace element: {}", mono.render(&h)).unwrap();
    if let Some(n) = note {
        writeln!(s, "{n}").unwrap();
    }
    Ok(s)
}

pub fn cmd_fixtures(action: &FixturesAction) -> Result<String, CliError> {
    match action {
        FixturesAction::List => Ok(fixture_names().iter().map(|n| format!("{n}\n")).collect()),
        FixturesAction::Emit { name } => Ok(CurveSpec::for_fixture(name)?.to_toml()),
    }
}

/// Builds the algebra and the trace kit, mapping solve failures to
/// verification failures.
pub fn solve(alg: &CurveAlgebra, dh: Option<u64>) -> Result<TraceKit, CliError> {
    alg.annihilator_solve(dh).map_err(|e| match e {
        CurveError::Semigroup(SemigroupError::InvalidTraceDegree(_)) => CliError::Curve(e),
        other => CliError::Verify(other.to_string()),
    })
}

fn describe(alg: &CurveAlgebra) -> String {
    let h = alg.semigroup();
    format!("curve {} r={} g={} conductor={}", angle(h.generators()), alg.r(), h.genus(), h.conductor())
}

pub fn cmd_curve(spec: &CurveSpec, action: CurveAction, opts: &RunOptions) -> Result<(String, i32), CliError> {
    if action == CurveAction::Check {
        return match spec.build() {
            Ok(alg) => Ok((check_report(&alg, opts.json), EXIT_OK)),
            Err(CliError::Curve(e @ CurveError::TableInvalid { .. })) => {
                let text = if opts.json {
                    serde_json::to_string_pretty(&json!({"valid": false, "error": e.to_string()})).expect("json") + "\n"
                } else {
                    format!("table: INVALID ({e})\n")
                };
                Ok((text, EXIT_VERIFY))
            }
            Err(e) => Err(e),
        };
    }
    let alg = spec.build()?;
    match action {
        CurveAction::Check => unreachable!("handled above"),
        CurveAction::Trace => {
            let kit = solve(&alg, opts.dh)?;
            trace_report(&alg, &kit, opts.json).map(|s| (s, EXIT_OK))
        }
        CurveAction::Differentials => {
            let kit = solve(&alg, opts.dh)?;
            Ok((differentials_report(&alg, &kit, opts.json), EXIT_OK))
        }
        CurveAction::Expand => {
            let kit = solve(&alg, opts.dh)?;
            expand_report(&alg, &kit, opts).map(|s| (s, EXIT_OK))
        }
        CurveAction::Verify => {
            let checks = verify::battery(&alg, opts);
            let ok = checks.iter().all(|c| c.passed);
            let text = if opts.json {
                serde_json::to_string_pretty(&json!({"passed": ok, "checks": checks})).expect("json") + "\n"
            } else {
                let mut s = describe(&alg) + "\n";
                for c in &checks {
                    writeln!(
                        s,
                        "{} {}{}",
                        if c.passed { "PASS" } else { "FAIL" },
                        c.name,
                        if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) }
                    )
                    .unwrap();
                }
                writeln!(s, "{}", if ok { "all checks passed" } else { "verification FAILED" }).unwrap();
                s
            };
            Ok((text, if ok { EXIT_OK } else { EXIT_VERIFY }))
        }
    }
}

fn check_report(alg: &CurveAlgebra, as_json: bool) -> String {
    let gens: Vec<Value> = alg
        .gen_index()
        .iter()
        .enumerate()
        .map(|(j, (g, idx))| {
            let deg = alg.minimal_poly_of_generator(j + 1).map(|f| f.degree());
            json!({"generator": g, "basis_index": idx, "minimal_polynomial_degree": deg.as_ref().ok(), "error": deg.err().map(|e| e.to_string())})
        })
        .collect();
    if as_json {
        let v = json!({"valid": true, "semigroup": alg.semigroup().report(), "names": alg.names(), "generators": gens});
        return serde_json::to_string_pretty(&v).expect("json") + "\n";
    }
    let mut s = describe(alg) + "\n";
    writeln!(s, "table: valid (shape, unit, symmetry, weight filtration, associativity)").unwrap();
    writeln!(s, "basis: {}", alg.names().join(", ")).unwrap();
    for g in gens {
        writeln!(
            s,
            "generator {} (basis {}): minimal polynomial degree {}",
            g["generator"], g["basis_index"], g["minimal_polynomial_degree"]
        )
        .unwrap();
    }
    s
}

fn trace_report(alg: &CurveAlgebra, kit: &TraceKit, as_json: bool) -> Result<String, CliError> {
    let inv = kit.invariants_report(alg).map_err(|e| CliError::Verify(e.to_string()))?;
    let module = kit.complementary_module(alg, YhatMode::Truncated).map_err(|e| CliError::Verify(e.to_string()))?;
    let h = alg.semigroup();
    let upsilon: Vec<String> = kit.upsilon.iter().map(|u| alg.format_element(u)).collect();
    let yhat: Vec<String> = module.generators.iter().map(|u| alg.format_element(u)).collect();
    let hx = alg.format_element(&kit.hx);
    let top = alg.top_weight_monomial(&kit.hx).map(|(c, m, exact)| {
        let mono = alg.format_generator_monomial(&m);
        let head = if c.is_one() { mono } else { format!("{}*{mono}", fmt_rat(&c)) };
        if exact {
            head
        } else {
            format!("{head} + (lower weight)")
        }
    });
    if as_json {
        let v = json!({
            "d_h": kit.d_h,
            "minimal_valid_trace_degree": h.minimal_valid_trace_degree(),
            "h_X": hx,
            "h_X_top_weight": top,
            "ell": kit.ell,
            "ehat": kit.ehat,
            "delta": kit.delta,
            "delta_leading": kit.delta_leading.iter().map(fmt_rat).collect::<Vec<_>>(),
            "upsilon": upsilon,
            "yhat_truncated": yhat,
            "principal": module.principal,
            "invariants": inv,
            "identities": inv.checks().into_iter().map(|(n, ok)| json!({"name": n, "holds": ok})).collect::<Vec<_>>(),
        });
        return Ok(serde_json::to_string_pretty(&v).expect("json") + "\n");
    }
    let mut s = describe(alg) + "\n";
    writeln!(s, "d_h = {} (minimal valid trace degree {})", kit.d_h, h.minimal_valid_trace_degree()).unwrap();
    writeln!(s, "h_X = {hx}").unwrap();
    if let Some(t) = &top {
        writeln!(s, "h_X = {t}").unwrap();
    }
    writeln!(s, "{:>3} {:>5} {:>5} {:>5} {:>6}  Y^_i", "i", "e_i", "e^_i", "delta", "lead").unwrap();
    for i in 0..alg.r() {
        writeln!(
            s,
            "{:>3} {:>5} {:>5} {:>5} {:>6}  {}",
            i,
            alg.e()[i],
            kit.ehat[i],
            kit.delta[i],
            fmt_rat(&kit.delta_leading[i]),
            upsilon[i]
        )
        .unwrap();
    }
    writeln!(s, "yhat (truncated): {}", yhat.join(" | ")).unwrap();
    writeln!(s, "R_X^c = span(yhat) / h_X; 1/h_X generates: {}", if module.principal { "yes" } else { "no" }).unwrap();
    writeln!(s, "kX = {} (d_h - 2g - r + 1), from norms {}", inv.kx, inv.kx_from_norms).unwrap();
    writeln!(s, "c^_X = {} (2g = {}), c_X = {} (conductor {})", inv.c_hat, 2 * inv.g, inv.c_x, inv.conductor).unwrap();
    writeln!(s, "symmetric: {}", if inv.symmetric { "yes" } else { "no" }).unwrap();
    for (n, ok) in inv.checks() {
        writeln!(s, "  [{}] {n}", if ok { "ok" } else { "FAIL" }).unwrap();
    }
    Ok(s)
}

fn differentials_report(alg: &CurveAlgebra, kit: &TraceKit, as_json: bool) -> String {
    let h = alg.semigroup();
    let count = h.genus() + h.conductor() as usize;
    let basis = alg.differential_basis(kit, count);
    let gap_ok = basis.gap_theorem_holds(h);
    if as_json {
        let rows: Vec<Value> = basis
            .entries
            .iter()
            .map(|e| json!({"k": e.k, "i": e.i, "numerator": alg.format_element(&e.numerator), "weight": e.weight, "gap_weight": e.gap_weight}))
            .collect();
        let v = json!({"denominator": alg.format_element(&kit.hx), "genus": h.genus(), "entries": rows, "gap_theorem": gap_ok});
        return serde_json::to_string_pretty(&v).expect("json") + "\n";
    }
    let mut s = describe(alg) + "\n";
    writeln!(s, "nu_n = phi^_n dx / h_X,  h_X = {}", alg.format_element(&kit.hx)).unwrap();
    writeln!(s, "{:>3} {:>7} {:>7}  phi^", "n", "-wt", "wt+1").unwrap();
    for (n, e) in basis.entries.iter().enumerate() {
        let mark = if n + 1 == h.genus() { "  <- last holomorphic" } else { "" };
        writeln!(s, "{:>3} {:>7} {:>7}  {}{}", n + 1, e.weight, e.gap_weight, alg.format_element(&e.numerator), mark)
            .unwrap();
    }
    writeln!(
        s,
        "gap theorem (first g = gaps, first g + c = Z\\H in [-c, c]): {}",
        if gap_ok { "holds" } else { "FAILS" }
    )
    .unwrap();
    s
}

/// Default truncation order `conductor + 2g + r`.
pub fn default_order(alg: &CurveAlgebra) -> usize {
    let h = alg.semigroup();
    h.conductor() as usize + 2 * h.genus() + alg.r()
}

fn expand_report(alg: &CurveAlgebra, kit: &TraceKit, opts: &RunOptions) -> Result<String, CliError> {
    let order = opts.order.unwrap_or_else(|| default_order(alg));
    let ex = alg.expand_at_infinity(kit, order).map_err(|e| CliError::Verify(e.to_string()))?;
    let show = |x: &wcurve::Series| x.truncate(x.valuation() + 6).to_string();
    if opts.json {
        let nus: Vec<Value> = ex
            .nu
            .iter()
            .map(|n| json!({"index": n.index, "gap": n.gap, "leading_exponent": n.leading_exponent, "scale": fmt_rat(&n.scale), "series": show(&n.series)}))
            .collect();
        let v = json!({
            "s": ex.s, "i_s": ex.i_s, "i_r": ex.i_r, "order": ex.order, "gauge_exact": ex.gauge_exact,
            "x": show(&ex.x),
            "basis": ex.basis.iter().map(show).collect::<Vec<_>>(),
            "nu": nus,
        });
        return Ok(serde_json::to_string_pretty(&v).expect("json") + "\n");
    }
    let mut s = describe(alg) + "\n";
    writeln!(
        s,
        "t = x^{} / y_{}^{} (gauge exact: {}), relative order {}",
        ex.i_r,
        ex.s,
        ex.i_s,
        if ex.gauge_exact { "yes" } else { "no" },
        ex.order
    )
    .unwrap();
    writeln!(s, "x = {}", show(&ex.x)).unwrap();
    for (i, y) in ex.basis.iter().enumerate().skip(1) {
        writeln!(s, "{} = {}", alg.names()[i], show(y)).unwrap();
    }
    for n in &ex.nu {
        writeln!(
            s,
            "nu_{} = {} * ({}) dt   [gap {}, t^{}]",
            n.index,
            fmt_rat(&n.scale),
            show(&n.series),
            n.gap,
            n.leading_exponent
        )
        .unwrap();
    }
    Ok(s)
}
