//! Command-line front end for the point-diffraction toolkit.
//!
//! Every command reads complete JSON inputs, computes, and then writes its
//! whole output in one shot, so a failed run never leaves partial output.
//! Exit codes: 0 success, 2 invalid input, 3 violated numerical contract,
//! 4 resource cap exceeded, 64 usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use diffrakt_core::density::{
    autocorrelation, bragg_spectrum, diffraction, homometric, Density, PointMeasure,
};
use diffrakt_core::inverse::{
    circle_family_check, extract_phase_from_density, gm_rational_check, solve_family,
};
use diffrakt_core::io as dio;
use diffrakt_core::phaseforms::{
    first_divergent_moment, make_elementary, phase_group_structure, same_phase_form,
};
use diffrakt_core::process::{build_process, find_translation, verify};
use diffrakt_core::relators::{
    canonical_basis, covering_number, n_zero, relator_lattice, MAX_BASIS_DIM,
};
use diffrakt_core::turn::Turn;
use diffrakt_core::{
    Error, ErrorKind, Group, Result, C64, DEFAULT_ORDER_CAP, DEFAULT_REL_TOL,
};

#[derive(Parser)]
#[command(
    name = "diffrakt",
    version,
    about = "Diffraction patterns of weighted point sets and the densities behind them"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the diffraction pattern of a density
    Diffract(SpectArgs),
    /// Compute the autocorrelation of a density
    Autocorr(FnArgs),
    /// Describe every density with a given diffraction pattern
    Solve(SolveArgs),
    /// Recover amplitude and phase data from a density
    Extract(ExtractArgs),
    /// Decide whether two densities share a diffraction pattern
    Homometric(PairArgs),
    /// Compare the moment tables of two homometric densities
    Moments(MomentsArgs),
    /// Analyze the relator lattice of a diffraction support
    Relators(RelatorsArgs),
    /// Build the stationary random process and verify its identities
    ProcessVerify(ProcessArgs),
    /// Test a cyclic density for rational weights on a closed support
    GmCheck(ExtractArgs),
    /// Verify unimodularity of a circle-valued coefficient family
    CircleCheck(CircleArgs),
    /// Run a built-in example end to end
    Demo(DemoArgs),
}

#[derive(Args)]
struct CommonIo {
    /// Input file (JSON)
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Write output here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Group order cap (overrides the DIFFRAKT_CAP environment variable)
    #[arg(long, value_name = "N")]
    cap: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct SpectArgs {
    #[command(flatten)]
    io: CommonIo,
    /// Relative support threshold
    #[arg(long, value_name = "TOL")]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct FnArgs {
    #[command(flatten)]
    io: CommonIo,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    io: CommonIo,
    /// Relative support threshold (replaces the tolerance stored in the input)
    #[arg(long, value_name = "TOL")]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Rows in the csv parameter sweep
    #[arg(long, value_name = "N", default_value_t = 600)]
    samples: usize,
}

#[derive(Args)]
struct ExtractArgs {
    #[command(flatten)]
    io: CommonIo,
    /// Relative support threshold
    #[arg(long, value_name = "TOL")]
    tol: Option<f64>,
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    io: CommonIo,
    /// Second input file (JSON)
    #[arg(long, value_name = "FILE")]
    with: PathBuf,
    /// Relative comparison tolerance
    #[arg(long, value_name = "TOL")]
    tol: Option<f64>,
}

#[derive(Args)]
struct MomentsArgs {
    #[command(flatten)]
    io: CommonIo,
    /// Second input file (JSON)
    #[arg(long, value_name = "FILE")]
    with: PathBuf,
    /// Relative support threshold
    #[arg(long, value_name = "TOL")]
    tol: Option<f64>,
    /// Highest moment order to compare
    #[arg(long, value_name = "M", default_value_t = 8)]
    moments: u64,
}

#[derive(Args)]
struct RelatorsArgs {
    #[command(flatten)]
    io: CommonIo,
    /// Longest relator length to search when locating the generating length
    #[arg(long, value_name = "N", default_value_t = 12)]
    max_length: u64,
}

#[derive(Args)]
struct ProcessArgs {
    #[command(flatten)]
    io: CommonIo,
    /// Seed for the sampled phase data and probe functions
    #[arg(long, value_name = "SEED", default_value_t = 0)]
    seed: u64,
    /// Probe functions per identity
    #[arg(long, value_name = "N", default_value_t = 2)]
    trials: usize,
    /// Largest acceptable relative residual
    #[arg(long, value_name = "TOL", default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args)]
struct CircleArgs {
    #[command(flatten)]
    io: CommonIo,
    /// Largest acceptable deviation from unit modulus
    #[arg(long, value_name = "TOL", default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    M1,
    M2,
    M3,
    M4,
    M5,
    Z6,
    Circle,
}

#[derive(Args)]
struct DemoArgs {
    /// Which example to run
    #[arg(value_enum)]
    name: DemoName,
    /// Write output here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// Parse `args` (including the program name), run the command, and return the
/// process exit code.
pub fn run(args: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (out, text) = match dispatch(cli.command) {
        Ok(pair) => pair,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return 2;
            }
        }
    }
    0
}

fn exit_code(e: &Error) -> i32 {
    match e.kind() {
        ErrorKind::Validation => 2,
        ErrorKind::Contract => 3,
        ErrorKind::ResourceCap => 4,
    }
}

fn dispatch(cmd: Cmd) -> Result<(Option<PathBuf>, String)> {
    match cmd {
        Cmd::Diffract(a) => {
            let text = cmd_diffract(&a)?;
            Ok((a.io.out, text))
        }
        Cmd::Autocorr(a) => {
            let text = cmd_autocorr(&a)?;
            Ok((a.io.out, text))
        }
        Cmd::Solve(a) => {
            let text = cmd_solve(&a)?;
            Ok((a.io.out, text))
        }
        Cmd::Extract(a) => {
            let text = cmd_extract(&a)?;
            Ok((a.io.out, text))
        }
        Cmd::Homometric(a) => {
            let text = cmd_homometric(&a)?;
            Ok((a.io.out, text))
        }
        Cmd::Moments(a) => {
            let text = cmd_moments(&a)?;
            Ok((a.io.out, text))
        }
        Cmd::Relators(a) => {
            let text = cmd_relators(&a)?;
            Ok((a.io.out, text))
        }
        Cmd::ProcessVerify(a) => {
            let text = cmd_process_verify(&a)?;
            Ok((a.io.out, text))
        }
        Cmd::GmCheck(a) => {
            let text = cmd_gm_check(&a)?;
            Ok((a.io.out, text))
        }
        Cmd::CircleCheck(a) => {
            let text = cmd_circle_check(&a)?;
            Ok((a.io.out, text))
        }
        Cmd::Demo(a) => {
            let text = cmd_demo(a.name)?;
            Ok((a.out, text))
        }
    }
}

fn resolve_cap(flag: Option<u64>) -> Result<u64> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("DIFFRAKT_CAP") {
        Ok(s) => s
            .parse()
            .map_err(|_| Error::Invalid(format!("DIFFRAKT_CAP is not a number: {s:?}"))),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

fn read_input(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn load_density(path: &Path, cap: u64) -> Result<Density> {
    let j: dio::DensityJson = dio::parse_json(&read_input(path)?)?;
    dio::density_from_json(&j, cap)
}

fn load_measure(path: &Path, cap: u64) -> Result<PointMeasure> {
    let j: dio::PointMeasureJson = dio::parse_json(&read_input(path)?)?;
    dio::point_measure_from_json(&j, cap)
}

fn cmd_diffract(a: &SpectArgs) -> Result<String> {
    let cap = resolve_cap(a.io.cap)?;
    let rho = load_density(&a.io.input, cap)?;
    let omega = diffraction(&rho, a.tol.unwrap_or(DEFAULT_REL_TOL));
    match a.format {
        Format::Json => dio::to_json_string(&dio::point_measure_to_json(&omega)),
        Format::Csv => Ok(dio::point_measure_csv(&omega)),
    }
}

fn cmd_autocorr(a: &FnArgs) -> Result<String> {
    let cap = resolve_cap(a.io.cap)?;
    let rho = load_density(&a.io.input, cap)?;
    let gamma = autocorrelation(&rho);
    match a.format {
        Format::Json => dio::to_json_string(&dio::function_to_json(&gamma)),
        Format::Csv => Ok(dio::function_csv(&gamma)),
    }
}

fn cmd_solve(a: &SolveArgs) -> Result<String> {
    let cap = resolve_cap(a.io.cap)?;
    let mut omega = load_measure(&a.io.input, cap)?;
    if let Some(tol) = a.tol {
        omega = PointMeasure::new(omega.group(), omega.weights().to_vec(), tol)?;
    }
    let family = solve_family(&omega)?;
    match a.format {
        Format::Json => {
            let sample = family.sample(&vec![Turn::ZERO; family.p()], &vec![1i8; family.q()])?;
            dio::to_json_string(&dio::family_report(&family, &sample))
        }
        Format::Csv => dio::family_sweep_csv(&family, a.samples),
    }
}

fn cmd_extract(a: &ExtractArgs) -> Result<String> {
    let cap = resolve_cap(a.io.cap)?;
    let rho = load_density(&a.io.input, cap)?;
    let ex = extract_phase_from_density(&rho, a.tol.unwrap_or(DEFAULT_REL_TOL))?;
    dio::to_json_string(&dio::extracted_to_json(&ex))
}

fn cmd_homometric(a: &PairArgs) -> Result<String> {
    let cap = resolve_cap(a.io.cap)?;
    let lhs = load_density(&a.io.input, cap)?;
    let rhs = load_density(&a.with, cap)?;
    let same = homometric(&lhs, &rhs, a.tol.unwrap_or(DEFAULT_REL_TOL))?;
    Ok(format!("homometric: {same}\n"))
}

fn cmd_moments(a: &MomentsArgs) -> Result<String> {
    let cap = resolve_cap(a.io.cap)?;
    let tol = a.tol.unwrap_or(DEFAULT_REL_TOL);
    let lhs = load_density(&a.io.input, cap)?;
    let rhs = load_density(&a.with, cap)?;
    if !homometric(&lhs, &rhs, tol)? {
        return Err(Error::Invalid(
            "densities are not homometric, so their moment tables are not comparable".into(),
        ));
    }
    let ea = extract_phase_from_density(&lhs, tol)?;
    let eb = extract_phase_from_density(&rhs, tol)?;
    let lat = relator_lattice(ea.form.basis())?;
    let same = same_phase_form(&ea.form, &eb.form, &lat)?;
    let shift = find_translation(&ea.form, &eb.form)?;
    let first = first_divergent_moment(&ea.form, &eb.form, &lat, a.moments)?;

    let mut out = String::new();
    writeln!(out, "homometric: true").unwrap();
    writeln!(out, "same solution class: {same}").unwrap();
    match shift {
        Some(u) => writeln!(out, "translation: {u}").unwrap(),
        None => writeln!(out, "translation: none").unwrap(),
    }
    match first {
        Some(m) => {
            writeln!(out, "moments agree through order {}", m - 1).unwrap();
            writeln!(out, "first divergent moment: {m}").unwrap();
        }
        None => writeln!(out, "moments agree through order {}", a.moments).unwrap(),
    }
    Ok(out)
}

fn cmd_relators(a: &RelatorsArgs) -> Result<String> {
    let cap = resolve_cap(a.io.cap)?;
    let omega = load_measure(&a.io.input, cap)?;
    let spectrum = bragg_spectrum(&omega)?;
    let basis = canonical_basis(&spectrum);
    let lat = relator_lattice(&basis)?;
    let class = phase_group_structure(&lat)?;
    let cover = covering_number(&spectrum)?;

    let mut out = String::new();
    writeln!(out, "group: {}", basis.group().describe()).unwrap();
    writeln!(
        out,
        "spectrum: {} points{}",
        spectrum.len(),
        if spectrum.zero_in() { " including zero" } else { "" }
    )
    .unwrap();
    writeln!(out, "free pairs: {}", basis.p()).unwrap();
    writeln!(out, "order-two generators: {}", basis.q()).unwrap();
    writeln!(out, "lattice index: {}", lat.index()).unwrap();
    for row in lat.hnf_rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        writeln!(out, "relation: [{}]", cells.join(" ")).unwrap();
    }
    if basis.dim() <= MAX_BASIS_DIM {
        match n_zero(&lat, a.max_length)? {
            Some(n) => writeln!(out, "shortest generating length: {n}").unwrap(),
            None => {
                writeln!(out, "shortest generating length: none within {}", a.max_length).unwrap()
            }
        }
    } else {
        writeln!(out, "shortest generating length: skipped (basis too large)").unwrap();
    }
    match (cover.r, cover.bound) {
        (Some(r), Some(b)) => writeln!(out, "covering number: {r} (length bound {b})").unwrap(),
        _ => writeln!(out, "covering number: none (support does not generate)").unwrap(),
    }
    writeln!(out, "class group: {class}").unwrap();
    if class.circle_rank == 0 && class.finite_factors.is_empty() {
        writeln!(
            out,
            "every density with this diffraction is a translate of one solution"
        )
        .unwrap();
    }
    Ok(out)
}

fn cmd_process_verify(a: &ProcessArgs) -> Result<String> {
    let cap = resolve_cap(a.io.cap)?;
    let omega = load_measure(&a.io.input, cap)?;
    let basis = canonical_basis(&bragg_spectrum(&omega)?);
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let angles: Vec<Turn> = (0..basis.p())
        .map(|_| Turn::real(rng.gen_range(0.0..1.0)))
        .collect();
    let signs: Vec<i8> = (0..basis.q())
        .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
        .collect();
    let form = make_elementary(&basis, &angles, &signs)?;
    let model = build_process(&omega, &form)?;
    let report = verify(&model, a.seed, a.trials)?;
    if !report.passes(a.tol) {
        return Err(Error::Contract(format!(
            "largest relative residual {:e} exceeds {:e}",
            report.max_residual(),
            a.tol
        )));
    }
    dio::to_json_string(&report)
}

fn cmd_gm_check(a: &ExtractArgs) -> Result<String> {
    let cap = resolve_cap(a.io.cap)?;
    let rho = load_density(&a.io.input, cap)?;
    let report = gm_rational_check(&rho, a.tol.unwrap_or(DEFAULT_REL_TOL))?;

    let mut out = String::new();
    writeln!(out, "modulus: {}", report.modulus).unwrap();
    writeln!(out, "rational weights: {}", report.is_rational).unwrap();
    if !report.irrational_points.is_empty() {
        let pts: Vec<String> = report
            .irrational_points
            .iter()
            .map(|x| x.to_string())
            .collect();
        writeln!(out, "irrational at: {}", pts.join(" ")).unwrap();
    }
    writeln!(out, "support closed under coprime multipliers: {}", report.closed).unwrap();
    if !report.violations.is_empty() {
        let vs: Vec<String> = report
            .violations
            .iter()
            .map(|(k, j)| format!("{k} x{j}"))
            .collect();
        writeln!(out, "closure violations: {}", vs.join(" ")).unwrap();
    }
    writeln!(out, "moment bound: {}", report.moment_bound).unwrap();
    writeln!(out, "compatible: {}", report.passes()).unwrap();
    Ok(out)
}

fn cmd_circle_check(a: &CircleArgs) -> Result<String> {
    let j: dio::CircleInputJson = dio::parse_json(&read_input(&a.io.input)?)?;
    let values: Vec<(i64, Turn)> = j.values.iter().map(|&(k, t)| (k, Turn::real(t))).collect();
    let report = circle_family_check(&values, j.window)?;

    let mut out = String::new();
    writeln!(out, "frequency pairs: {}", report.pair_count).unwrap();
    writeln!(out, "window: {}", report.window).unwrap();
    writeln!(out, "coefficients: {}", report.coefficients.len()).unwrap();
    writeln!(
        out,
        "max deviation from unit modulus: {:.2e}",
        report.max_unit_deviation
    )
    .unwrap();
    writeln!(out, "unimodular: {}", report.passes(a.tol)).unwrap();
    Ok(out)
}

const W1: [f64; 6] = [11.0, 25.0, 42.0, 45.0, 31.0, 14.0];
const W2: [f64; 6] = [10.0, 17.0, 35.0, 46.0, 39.0, 21.0];

fn check(out: &mut String, ok: bool, label: &str) -> Result<()> {
    if !ok {
        return Err(Error::Contract(format!("demo check failed: {label}")));
    }
    writeln!(out, "ok {label}").unwrap();
    Ok(())
}

/// Flat diffraction on `Z/m`: the comb `m * indicator(0)` and everything
/// sharing its pattern.
fn demo_comb(m: i64) -> Result<String> {
    let g = Group::new(&[m])?;
    let mut w = vec![0.0; g.order()];
    w[0] = m as f64;
    let rho = Density::from_real(&g, &w)?;
    let family = solve_family(&diffraction(&rho, DEFAULT_REL_TOL))?;

    let mut out = String::new();
    writeln!(out, "group: {}", g.describe()).unwrap();
    writeln!(out, "density: comb of mass {m} at zero").unwrap();
    writeln!(out, "free circles: {}", family.p()).unwrap();
    writeln!(out, "sign choices: {}", family.q()).unwrap();
    writeln!(out, "class group: {}", family.class_group()).unwrap();

    let comb = family.sample(&vec![Turn::ZERO; family.p()], &vec![1i8; family.q()])?;
    let dev = comb
        .weights()
        .iter()
        .zip(rho.weights())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0f64, f64::max);
    check(&mut out, dev < 1e-9, "sample at zero parameters is the comb")?;

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut all_ok = true;
    for _ in 0..5 {
        let angles: Vec<Turn> = (0..family.p())
            .map(|_| Turn::real(rng.gen_range(0.0..1.0)))
            .collect();
        let signs: Vec<i8> = (0..family.q())
            .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
            .collect();
        let s = family.sample(&angles, &signs)?;
        all_ok &= s.is_real(1e-9) && homometric(&s, &rho, 1e-9)?;
    }
    check(&mut out, all_ok, "sampled densities are real and homometric to the comb")?;

    if family.p() == 0 && family.q() == 1 {
        let shift = find_translation(&family.form(&[], &[1])?, &family.form(&[], &[-1])?)?;
        check(
            &mut out,
            shift.is_some(),
            "the sign flip is a translation",
        )?;
    }
    writeln!(out, "all checks passed").unwrap();
    Ok(out)
}

fn demo_z6() -> Result<String> {
    let g = Group::new(&[6])?;
    let rho1 = Density::from_real(&g, &W1)?;
    let rho2 = Density::from_real(&g, &W2)?;
    let omega = diffraction(&rho1, DEFAULT_REL_TOL);

    let mut out = String::new();
    writeln!(out, "group: {}", g.describe()).unwrap();
    writeln!(out, "weights A: [11, 25, 42, 45, 31, 14]").unwrap();
    writeln!(out, "weights B: [10, 17, 35, 46, 39, 21]").unwrap();
    let amps: Vec<String> = omega
        .weights()
        .iter()
        .map(|w| format!("{:.6}", w.sqrt()))
        .collect();
    writeln!(out, "sqrt intensities: [{}]", amps.join(", ")).unwrap();

    check(&mut out, homometric(&rho1, &rho2, 1e-9)?, "equal diffraction patterns")?;

    let ea = extract_phase_from_density(&rho1, 1e-9)?;
    let eb = extract_phase_from_density(&rho2, 1e-9)?;
    let one = g.element(&[1])?;
    writeln!(out, "phase turn A: {:.6}", ea.form.evaluate_turn(&one)?.value()).unwrap();
    writeln!(out, "phase turn B: {:.6}", eb.form.evaluate_turn(&one)?.value()).unwrap();

    let lat = relator_lattice(ea.form.basis())?;
    check(
        &mut out,
        !same_phase_form(&ea.form, &eb.form, &lat)?,
        "the two solutions are not translates",
    )?;
    let first = first_divergent_moment(&ea.form, &eb.form, &lat, 8)?;
    check(&mut out, first == Some(6), "moments agree through order 5 and split at 6")?;

    let class = phase_group_structure(&lat)?;
    writeln!(out, "class group: {class}").unwrap();

    let model = build_process(&omega, &ea.form)?;
    let report = verify(&model, 1, 2)?;
    check(
        &mut out,
        report.passes(1e-8),
        "stationary process identities hold",
    )?;

    let gm = gm_rational_check(&rho1, 1e-9)?;
    check(&mut out, gm.passes(), "rational weights on a closed support")?;
    writeln!(out, "all checks passed").unwrap();
    Ok(out)
}

fn demo_circle() -> Result<String> {
    let values = [
        (1i64, Turn::exact(1, 4)),
        (-1i64, Turn::exact(3, 4)),
        (3i64, Turn::real(0.37)),
        (-3i64, Turn::real(0.63)),
    ];
    let report = circle_family_check(&values, 8)?;

    let mut out = String::new();
    writeln!(out, "frequencies: 1 and 3, window 8").unwrap();
    writeln!(out, "coefficients: {}", report.coefficients.len()).unwrap();
    writeln!(
        out,
        "max deviation from unit modulus: {:.2e}",
        report.max_unit_deviation
    )
    .unwrap();
    check(&mut out, report.passes(1e-12), "all coefficients stay on the unit circle")?;
    let at_one = report
        .coefficients
        .iter()
        .find(|(k, _)| *k == 1)
        .map(|(_, c)| *c)
        .unwrap_or(C64::new(0.0, 0.0));
    check(
        &mut out,
        (at_one - C64::new(0.0, 1.0)).norm() < 1e-12,
        "quarter turn lands at i",
    )?;
    writeln!(out, "all checks passed").unwrap();
    Ok(out)
}

fn cmd_demo(name: DemoName) -> Result<String> {
    match name {
        DemoName::M1 => demo_comb(1),
        DemoName::M2 => demo_comb(2),
        DemoName::M3 => demo_comb(3),
        DemoName::M4 => demo_comb(4),
        DemoName::M5 => demo_comb(5),
        DemoName::Z6 => demo_z6(),
        DemoName::Circle => demo_circle(),
    }
}
