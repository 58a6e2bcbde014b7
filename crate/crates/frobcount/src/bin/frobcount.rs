use clap::{Parser, Subcommand, ValueEnum};
use frobcount::frobenius::{fedder_is_f_pure, is_uniformly_compatible, SplittingMap};
use frobcount::input::InputDocument;
use frobcount::report::ReportDocument;
use frobcount::systems::{
    check_bounds, system_from_splitting, verify_main_theorem, IdealSystem, Verdict,
    DEFAULT_MEMBER_CAP,
};
use frobcount::Error;
use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "frobcount", version, about = "Frobenius splittings, compatible ideals, and counting bounds over F_p[x_1..x_n]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input document (INI-like or JSON); stdin if omitted
    #[arg(long, global = true)]
    input: Option<std::path::PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Number of variables (verify-bound, or a synthesized standard splitting)
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Field characteristic when no input document is given
    #[arg(long, global = true)]
    p: Option<u32>,
    /// Splitting exponent when no input document is given
    #[arg(long, global = true)]
    e: Option<u32>,
    /// Cap on system members for lattice closure
    #[arg(long = "max-members", global = true)]
    max_members: Option<usize>,
    /// Count the zero ideal among compatible ideals (default true)
    #[arg(long = "include-zero-ideal", global = true)]
    include_zero_ideal: Option<bool>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Verify the pseudo-prime and intersection-compatibility conditions
    CheckSystem,
    /// Verify that the declared (e, u) defines a Frobenius splitting
    CheckSplitting,
    /// Check each declared ideal for compatibility with the splitting
    Compatible,
    /// List all compatibly split squarefree monomial ideals
    Enumerate,
    /// Fedder's criterion: is R/I F-pure?
    Fedder,
    /// Exhaustive sharpness check over coordinate-prime arrangements
    VerifyBound,
    /// Check ideals for compatibility with every splitting at once
    Uniform,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckSystem => "check-system",
            Command::CheckSplitting => "check-splitting",
            Command::Compatible => "compatible",
            Command::Enumerate => "enumerate",
            Command::Fedder => "fedder",
            Command::VerifyBound => "verify-bound",
            Command::Uniform => "uniform",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("FROBCOUNT_THREADS") {
        if let Ok(k) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
        }
    }
    let start = Instant::now();
    let (mut report, code) = match run(&cli) {
        Ok(pair) => pair,
        Err(err) => {
            let mut r = ReportDocument::new(cli.command.name(), &[]);
            r.verdict("error", &err);
            eprintln!("frobcount: {err}");
            (r, 2)
        }
    };
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    print!("{}", report.emit(matches!(cli.format, Format::Json)));
    ExitCode::from(code)
}

fn read_input(cli: &Cli) -> Result<(InputDocument, Vec<u8>), Error> {
    let raw = match &cli.input {
        Some(path) => std::fs::read(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?,
        None => {
            if let (Some(n), Some(p)) = (cli.n, cli.p) {
                return synthesize_standard(n, p, cli.e.unwrap_or(1));
            }
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| Error::Input(format!("stdin: {e}")))?;
            if buf.is_empty() {
                return Err(Error::Input(
                    "no input: pass --input FILE, pipe a document, or give --n and --p".into(),
                ));
            }
            buf
        }
    };
    let text = String::from_utf8(raw.clone()).map_err(|_| Error::Input("input is not UTF-8".into()))?;
    Ok((InputDocument::parse(&text)?, raw))
}

/// The standard splitting candidate u = (x_1 ... x_n)^(q-1) on F_p[x_1..x_n].
fn synthesize_standard(n: usize, p: u32, e: u32) -> Result<(InputDocument, Vec<u8>), Error> {
    if n == 0 {
        return Err(Error::Input("--n must be at least 1".into()));
    }
    frobcount::PrimeField::new(p)?;
    let q = (p as u64)
        .checked_pow(e)
        .ok_or(Error::ExponentOverflow)?;
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let u = format!("({})^{}", vars.join("*"), q - 1);
    let doc = format!(
        "[ring]\np = {p}\nvars = {}\n[splitting]\ne = {e}\nu = {u}\n",
        vars.join(", ")
    );
    let raw = doc.into_bytes();
    let text = String::from_utf8(raw.clone()).unwrap();
    Ok((InputDocument::parse(&text)?, raw))
}

fn member_cap(cli: &Cli, doc: &InputDocument) -> Result<usize, Error> {
    Ok(cli
        .max_members
        .or(doc.option_usize("max-members")?)
        .unwrap_or(DEFAULT_MEMBER_CAP))
}

fn splitting_of(doc: &InputDocument) -> Result<SplittingMap, Error> {
    let ring = doc.build_ring()?;
    let (e, u) = doc
        .build_splitting_u(&ring)?
        .ok_or_else(|| Error::Input("this command needs a [splitting] section".into()))?;
    SplittingMap::new(&ring, e, u)
}

fn verdict_code(any_false: bool) -> u8 {
    u8::from(any_false)
}

fn run(cli: &Cli) -> Result<(ReportDocument, u8), Error> {
    match cli.command {
        Command::VerifyBound => verify_bound(cli),
        Command::CheckSystem => check_system(cli),
        Command::CheckSplitting => check_splitting(cli),
        Command::Compatible => compatible(cli),
        Command::Enumerate => enumerate(cli),
        Command::Fedder => fedder(cli),
        Command::Uniform => uniform(cli),
    }
}

fn check_system(cli: &Cli) -> Result<(ReportDocument, u8), Error> {
    let (doc, raw) = read_input(cli)?;
    let mut report = ReportDocument::new("check-system", &raw);
    let ring = doc.build_ring()?;
    let system = IdealSystem::new(&ring, doc.build_ideals(&ring)?)?;
    report.warnings.extend(system.warnings().iter().cloned());
    report.verdict(
        "mode",
        match system.mode() {
            frobcount::systems::SystemMode::Monomial => "monomial",
            frobcount::systems::SystemMode::DeclaredPrime => "declared-prime",
            frobcount::systems::SystemMode::Mixed => "mixed",
        },
    );

    let pseudo = system.is_pseudo_prime()?;
    report.verdict("pseudo_prime", render_verdict(pseudo.verdict));
    if let Some(w) = &pseudo.witness {
        report.witness("pseudo_prime_violation", w);
    }
    if let Some(c) = pseudo.condition {
        report.verdict("pseudo_prime_failed_condition", c);
    }
    report.warnings.extend(pseudo.notes.iter().cloned());
    if pseudo.verdict == Verdict::Undecidable {
        return Ok((report, 2));
    }

    let compat = system.is_intersection_compatible(member_cap(cli, &doc)?)?;
    report.verdict("intersection_compatible", render_verdict(compat.verdict));
    report.verdict("lattice_size", compat.lattice_size);
    if let Some(v) = &compat.violation {
        report.witness("offending_sum", &v.sum);
        report.witness("offending_pair", format!("{} and {}", v.left, v.right));
    }

    let counts = system.count_by_dimension()?;
    for (d, c) in &counts {
        report.counts.insert(d.to_string(), *c as u64);
    }
    for d in 0..=system.ambient_embdim() {
        report.counts.entry(d.to_string()).or_insert(0);
    }
    let bounds = check_bounds(&counts, system.ambient_embdim(), false);
    let bounds_ok = bounds.rows.iter().all(|r| r.within) && bounds.total_within;
    report.verdict("bounds_respected", bounds_ok);
    report.set_bounds(&bounds);

    let any_false = !pseudo.verdict.is_true() || !compat.verdict.is_true() || !bounds_ok;
    Ok((report, verdict_code(any_false)))
}

fn check_splitting(cli: &Cli) -> Result<(ReportDocument, u8), Error> {
    let (doc, raw) = read_input(cli)?;
    let mut report = ReportDocument::new("check-splitting", &raw);
    let theta = splitting_of(&doc)?;
    let ok = theta.is_splitting()?;
    report.verdict("is_splitting", ok);
    report.witness("theta_of_1", theta.apply(&frobcount::Polynomial::one(theta.ring())).map(|f| f.render())?);
    Ok((report, verdict_code(!ok)))
}

fn compatible(cli: &Cli) -> Result<(ReportDocument, u8), Error> {
    let (doc, raw) = read_input(cli)?;
    let mut report = ReportDocument::new("compatible", &raw);
    let theta = splitting_of(&doc)?;
    let ok = theta.is_splitting()?;
    report.verdict("is_splitting", ok);
    if !ok {
        return Ok((report, 1));
    }
    let ring = theta.ring().clone();
    let mut any_false = false;
    for (spec, ideal) in doc.ideals.iter().zip(doc.build_ideals(&ring)?) {
        let c = theta.is_compatible(&ideal)?;
        any_false |= !c;
        report.verdict(&format!("compatible[{}]", spec.name), c);
        if !c {
            report.witness(&format!("incompatible[{}]", spec.name), ideal.render());
        }
    }
    Ok((report, verdict_code(any_false)))
}

fn enumerate(cli: &Cli) -> Result<(ReportDocument, u8), Error> {
    let (doc, raw) = read_input(cli)?;
    let mut report = ReportDocument::new("enumerate", &raw);
    let theta = splitting_of(&doc)?;
    let ok = theta.is_splitting()?;
    report.verdict("is_splitting", ok);
    if !ok {
        return Ok((report, 1));
    }
    let include_zero = match cli.include_zero_ideal {
        Some(b) => b,
        None => doc.option_bool("include-zero-ideal")?.unwrap_or(true),
    };
    let ss = system_from_splitting(&theta)?;
    let listed: Vec<_> = ss
        .all_compatible
        .iter()
        .filter(|m| include_zero || !m.is_zero())
        .collect();
    report.verdict("compatible_squarefree", listed.len());
    let width = listed.len().to_string().len();
    for (i, m) in listed.iter().enumerate() {
        report.witness(&format!("ideal_{i:0width$}"), m.render(theta.ring()));
    }
    let counts = ss.system.count_by_dimension()?;
    let counts = if include_zero {
        counts
    } else {
        // the zero ideal is the unique dimension-n prime member
        let mut c = counts;
        let n = theta.ring().num_vars();
        if let Some(v) = c.get_mut(&n) {
            *v -= 1;
            if *v == 0 {
                c.remove(&n);
            }
        }
        c
    };
    for (d, c) in &counts {
        report.counts.insert(d.to_string(), *c as u64);
    }
    let bounds = check_bounds(&counts, theta.ring().num_vars(), true);
    let bounds_ok = bounds.rows.iter().all(|r| r.within) && bounds.total_within;
    report.verdict("bounds_respected", bounds_ok);
    report.set_bounds(&bounds);
    Ok((report, verdict_code(!bounds_ok)))
}

fn fedder(cli: &Cli) -> Result<(ReportDocument, u8), Error> {
    let (doc, raw) = read_input(cli)?;
    let mut report = ReportDocument::new("fedder", &raw);
    let ring = doc.build_ring()?;
    if doc.ideals.is_empty() {
        return Err(Error::Input("fedder needs at least one [ideal] section".into()));
    }
    let mut any_false = false;
    for (spec, ideal) in doc.ideals.iter().zip(doc.build_ideals(&ring)?) {
        let pure = fedder_is_f_pure(&ideal)?;
        any_false |= !pure;
        report.verdict(
            &format!("f_pure[{}]", spec.name),
            if pure { "F-pure" } else { "not F-pure" },
        );
    }
    Ok((report, verdict_code(any_false)))
}

fn uniform(cli: &Cli) -> Result<(ReportDocument, u8), Error> {
    let (doc, raw) = read_input(cli)?;
    let mut report = ReportDocument::new("uniform", &raw);
    let ring = doc.build_ring()?;
    let e = cli.e.or(doc.splitting.as_ref().map(|s| s.e)).unwrap_or(1);
    if doc.ideals.is_empty() {
        return Err(Error::Input("uniform needs at least one [ideal] section".into()));
    }
    let mut any_false = false;
    for (spec, ideal) in doc.ideals.iter().zip(doc.build_ideals(&ring)?) {
        let u = is_uniformly_compatible(&ideal, e)?;
        any_false |= !u;
        report.verdict(&format!("uniformly_compatible[{}]", spec.name), u);
    }
    Ok((report, verdict_code(any_false)))
}

fn verify_bound(cli: &Cli) -> Result<(ReportDocument, u8), Error> {
    let n = cli.n.ok_or_else(|| Error::Input("verify-bound needs --n (1..4)".into()))?;
    let p = cli.p.unwrap_or(2);
    let params = format!("n={n},p={p}");
    let mut report = ReportDocument::new("verify-bound", params.as_bytes());
    let rep = verify_main_theorem(n, p)?;
    for (d, &e) in rep.max_e.iter().enumerate() {
        report.counts.insert(d.to_string(), e as u64);
    }
    let sharp = rep.sharp_everywhere();
    report.verdict("subsets_checked", rep.subsets_checked);
    report.verdict("compatible_subsets", rep.compatible_subsets);
    report.verdict("sharp_everywhere", sharp);
    report.verdict("upper_bound_violations", rep.upper_bound_violations);
    report.verdict("total_bound_violations", rep.total_bound_violations);
    report.verdict(
        "equality_only_at_full_arrangement",
        rep.simultaneous_equality_is_full_arrangement,
    );
    report.warnings.push(rep.note.clone());
    report.set_bounds(&rep);
    let ok = sharp
        && rep.upper_bound_violations == 0
        && rep.total_bound_violations == 0
        && rep.simultaneous_equality_is_full_arrangement
        && rep.full_total_only;
    Ok((report, verdict_code(!ok)))
}

fn render_verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::True => "true",
        Verdict::False => "false",
        Verdict::Undecidable => "undecidable",
    }
}
