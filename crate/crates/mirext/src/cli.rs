use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use mirext_core::catalog::{validate_inclusion, validate_inclusion_quick, LevelRankRecord};
use mirext_core::levelrank::{
    exp_set_levelrank, mirror_pair_detailed, verify_ring_isomorphism, LevelRankContext,
};
use mirext_core::mirror::{mirror_extension, mirror_report, MirrorLabel, NormalSubnetSpec};
use mirext_core::modinv::{commutant_search, verify_invariant, verify_levelrank_invariant, MassMatrix};
use mirext_core::modular::{
    build_modular_data_with, fusion_oracle_su2, quantum_dimension, verlinde_fusion, BuildOptions, ModularData,
    DEFAULT_PRECISION_BITS,
};
use mirext_core::weights::alcove_weights;
use mirext_core::{AffineWeight, Report};
use serde_json::{json, Value};

use crate::catalog_file::{self, inclusion_entry, Catalog};
use crate::envelope::{check_entries, Envelope};
use crate::files::{read_json, write_json, MassMatrixFile, SpectrumFile};
use crate::{exit, reproduce, CliError};

/// Associativity is O(n⁴); skip it above this many sectors.
const ASSOCIATIVITY_MAX_SECTORS: usize = 60;
/// Agreement of S-matrix and product-formula quantum dimensions.
const DIMS_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(name = "mirext", version, about = "Mirror extensions of SU(N)_K conformal nets")]
struct Cli {
    /// Working precision in bits for S matrices (53 = f64, up to 106 = double-double, above = multiprecision).
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION_BITS)]
    precision: u32,
    /// Print the JSON envelope on stdout and the human-readable form on stderr.
    #[arg(long, global = true)]
    json: bool,
    /// Accepted for compatibility; every computation is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
struct Alcove {
    /// Rank N of SU(N).
    n: u32,
    /// Level K.
    k: u32,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the level-K alcove with conformal weights.
    Weights(Alcove),
    /// Kac-Peterson S matrix, T phases and residuals.
    Smatrix(Alcove),
    /// Verlinde fusion coefficients.
    Fusion {
        #[command(flatten)]
        alcove: Alcove,
        /// Compare against the closed-form SU(2) fusion rules.
        #[arg(long)]
        oracle_check: bool,
    },
    /// Quantum dimensions and the global dimension.
    Dims(Alcove),
    /// Exp sets of normal subnets.
    #[command(subcommand)]
    Exp(ExpCommand),
    /// Level-rank partner of one weight of SU(n)_m.
    Pair {
        n: u32,
        m: u32,
        /// Dynkin labels λ1,…,λ(n−1).
        #[arg(long, value_delimiter = ',', required = true)]
        weight: Vec<u32>,
    },
    /// Mirror extension of a spectrum.
    #[command(subcommand)]
    Mirror(MirrorCommand),
    /// Conformal inclusion catalog.
    Catalog {
        /// Skip re-validation of the shipped catalog on load.
        #[arg(long)]
        trusted: bool,
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Modular invariants.
    #[command(subcommand)]
    Modinv(ModinvCommand),
    /// Run every acceptance criterion.
    ReproducePaper,
}

#[derive(Debug, Subcommand)]
enum ExpCommand {
    /// SU(n)_m × SU(m)_n ⊂ SU(nm)_1.
    Levelrank { n: u32, m: u32 },
    /// SU(n)_K ⊂ SU(n)_K1 × … × SU(n)_Kl, K = ΣKi.
    Diagonal {
        n: u32,
        #[arg(value_delimiter = ',')]
        levels: Vec<u32>,
    },
}

#[derive(Debug, Subcommand)]
enum MirrorCommand {
    Levelrank {
        n: u32,
        m: u32,
        #[arg(long)]
        spectrum: PathBuf,
        /// Write the mirror spectrum file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Diagonal {
        n: u32,
        #[arg(value_delimiter = ',')]
        levels: Vec<u32>,
        #[arg(long)]
        spectrum: PathBuf,
        /// Write the mirror result here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    List,
    Show { name: String },
    /// Full validation against freshly built modular data.
    Validate { name: String },
    /// Re-derive the whole catalog by branching search.
    Derive {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum ModinvCommand {
    /// All invariants with entries bounded by B.
    Search {
        #[command(flatten)]
        alcove: Alcove,
        #[arg(long, default_value_t = mirext_core::modinv::DEFAULT_ENTRY_BOUND)]
        bound: u32,
    },
    /// Check a mass matrix file for S and T invariance.
    Verify {
        #[arg(long)]
        z: PathBuf,
        #[command(flatten)]
        alcove: Alcove,
    },
}

struct Outcome {
    result: Value,
    checks: Report,
    human: String,
    /// Append one line per check to the human rendering.
    show_checks: bool,
}

impl Outcome {
    fn new(result: Value, checks: Report, human: String) -> Self {
        Outcome {
            result,
            checks,
            human,
            show_checks: true,
        }
    }
}

/// Parse `argv` (including the program name), execute, print, and return the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::SUCCESS };
            let _ = e.print();
            return code;
        }
    };
    let (name, parameters) = describe(&cli.command);
    let opts = BuildOptions::with_precision(cli.precision);
    let env = match execute(&cli.command, &opts) {
        Ok(out) => {
            let env = Envelope {
                command: name,
                parameters,
                result: out.result,
                checks: check_entries(&out.checks),
                precision_bits: cli.precision,
                error: None,
            };
            let shown = if out.show_checks { &out.checks } else { &Report::new() };
            emit(&env, &out.human, shown, cli.json);
            env
        }
        Err(e) => {
            let env = Envelope::failed(&name, parameters, cli.precision, &e);
            if cli.json {
                println!("{}", serde_json::to_string(&env).expect("serializable"));
            }
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    if env.all_passed() {
        exit::SUCCESS
    } else {
        exit::CHECK_FAILURE
    }
}

fn emit(env: &Envelope, human: &str, checks: &Report, json: bool) {
    let mut text = human.to_string();
    for c in &checks.checks {
        let _ = writeln!(text, "[{}] {}: {}", if c.pass { "pass" } else { "FAIL" }, c.name, c.detail);
    }
    if json {
        println!("{}", serde_json::to_string(env).expect("serializable"));
        eprint!("{text}");
    } else {
        print!("{text}");
    }
}

fn describe(cmd: &Command) -> (String, Value) {
    let alcove = |a: &Alcove| json!({"n": a.n, "k": a.k});
    match cmd {
        Command::Weights(a) => ("weights".into(), alcove(a)),
        Command::Smatrix(a) => ("smatrix".into(), alcove(a)),
        Command::Fusion { alcove: a, oracle_check } => (
            "fusion".into(),
            json!({"n": a.n, "k": a.k, "oracle_check": oracle_check}),
        ),
        Command::Dims(a) => ("dims".into(), alcove(a)),
        Command::Exp(ExpCommand::Levelrank { n, m }) => ("exp levelrank".into(), json!({"n": n, "m": m})),
        Command::Exp(ExpCommand::Diagonal { n, levels }) => {
            ("exp diagonal".into(), json!({"n": n, "levels": levels}))
        }
        Command::Pair { n, m, weight } => ("pair".into(), json!({"n": n, "m": m, "weight": weight})),
        Command::Mirror(MirrorCommand::Levelrank { n, m, spectrum, out }) => (
            "mirror levelrank".into(),
            json!({"n": n, "m": m, "spectrum": spectrum, "out": out}),
        ),
        Command::Mirror(MirrorCommand::Diagonal { n, levels, spectrum, out }) => (
            "mirror diagonal".into(),
            json!({"n": n, "levels": levels, "spectrum": spectrum, "out": out}),
        ),
        Command::Catalog { trusted, command } => match command {
            CatalogCommand::List => ("catalog list".into(), json!({"trusted": trusted})),
            CatalogCommand::Show { name } => ("catalog show".into(), json!({"name": name, "trusted": trusted})),
            CatalogCommand::Validate { name } => {
                ("catalog validate".into(), json!({"name": name, "trusted": trusted}))
            }
            CatalogCommand::Derive { out } => ("catalog derive".into(), json!({"out": out})),
        },
        Command::Modinv(ModinvCommand::Search { alcove: a, bound }) => (
            "modinv search".into(),
            json!({"n": a.n, "k": a.k, "bound": bound}),
        ),
        Command::Modinv(ModinvCommand::Verify { z, alcove: a }) => {
            ("modinv verify".into(), json!({"n": a.n, "k": a.k, "z": z}))
        }
        Command::ReproducePaper => ("reproduce-paper".into(), json!({})),
    }
}

fn execute(cmd: &Command, opts: &BuildOptions) -> Result<Outcome, CliError> {
    match cmd {
        Command::Weights(a) => weights(a),
        Command::Smatrix(a) => smatrix(a, opts),
        Command::Fusion { alcove, oracle_check } => fusion(alcove, *oracle_check, opts),
        Command::Dims(a) => dims(a, opts),
        Command::Exp(ExpCommand::Levelrank { n, m }) => exp_levelrank(*n, *m),
        Command::Exp(ExpCommand::Diagonal { n, levels }) => exp_diagonal(*n, levels),
        Command::Pair { n, m, weight } => pair(*n, *m, weight),
        Command::Mirror(MirrorCommand::Levelrank { n, m, spectrum, out }) => {
            let spec = NormalSubnetSpec::level_rank(*n, *m)?;
            mirror(&spec, spectrum, out.as_ref(), opts)
        }
        Command::Mirror(MirrorCommand::Diagonal { n, levels, spectrum, out }) => {
            let spec = NormalSubnetSpec::diagonal(*n, levels)?;
            mirror(&spec, spectrum, out.as_ref(), opts)
        }
        Command::Catalog { trusted, command } => catalog(command, *trusted, opts),
        Command::Modinv(ModinvCommand::Search { alcove, bound }) => modinv_search(alcove, *bound, opts),
        Command::Modinv(ModinvCommand::Verify { z, alcove }) => modinv_verify(z, alcove, opts),
        Command::ReproducePaper => reproduce_paper(opts),
    }
}

fn weight_json(w: &AffineWeight) -> Value {
    let h = w.conformal_weight();
    json!({
        "labels": w.labels(),
        "affine": w.affine_labels(),
        "display": w.to_string(),
        "h": h.exact.to_string(),
        "box_count": w.box_count(),
        "in_root_lattice": w.in_root_lattice(),
        "conjugate": w.conjugate().labels(),
    })
}

fn weights(a: &Alcove) -> Result<Outcome, CliError> {
    let ws = alcove_weights(a.n, a.k)?;
    let mut human = format!("SU({})_{}: {} weights\n", a.n, a.k, ws.len());
    for w in &ws {
        let _ = writeln!(human, "  {:?}  {}  h = {}", w.labels(), w, w.conformal_weight().exact);
    }
    let result = json!({
        "count": ws.len(),
        "central_charge": mirext_core::weights::central_charge(a.n, a.k).to_string(),
        "weights": ws.iter().map(weight_json).collect::<Vec<_>>(),
    });
    Ok(Outcome::new(result, Report::new(), human))
}

fn residual_checks(md: &ModularData, opts: &BuildOptions) -> Report {
    let r = md.residuals();
    let tol = opts.tolerance();
    let mut rep = Report::new();
    for (name, v) in [
        ("s_unitary", r.unitarity),
        ("s_symmetric", r.symmetry),
        ("s_squared_is_conjugation", r.charge_conjugation),
        ("st_cubed", r.modular),
    ] {
        rep.push(name, v < tol, format!("residual {v:.3e} (tolerance {tol:.1e})"));
    }
    rep
}

fn smatrix(a: &Alcove, opts: &BuildOptions) -> Result<Outcome, CliError> {
    let md = build_modular_data_with(a.n, a.k, opts)?;
    let n = md.len();
    let s: Vec<Vec<[f64; 2]>> = (0..n)
        .map(|i| (0..n).map(|j| [md.s(i, j).re, md.s(i, j).im]).collect())
        .collect();
    let result = json!({
        "labels": md.weights().iter().map(|w| w.labels().to_vec()).collect::<Vec<_>>(),
        "s": s,
        "h": md.h_values().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "central_charge": md.central_charge().to_string(),
        "t": (0..n).map(|i| [md.t(i).re, md.t(i).im]).collect::<Vec<_>>(),
    });
    let mut human = format!("SU({})_{}: {n}×{n} S matrix, c = {}\n", a.n, a.k, md.central_charge());
    if n <= 12 {
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| format!("{:+.6}{:+.6}i", md.s(i, j).re, md.s(i, j).im)).collect();
            let _ = writeln!(human, "  {}", row.join(" "));
        }
    }
    Ok(Outcome::new(result, residual_checks(&md, opts), human))
}

fn fusion(a: &Alcove, oracle_check: bool, opts: &BuildOptions) -> Result<Outcome, CliError> {
    if oracle_check && a.n != 2 {
        return Err(CliError::Usage("--oracle-check is only available for SU(2)".into()));
    }
    let md = build_modular_data_with(a.n, a.k, opts)?;
    let f = verlinde_fusion(&md)?;
    let n = f.len();
    let mut nonzero = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for (z, v) in f.product(x, y) {
                nonzero.push(json!([x, y, z, v]));
            }
        }
    }
    let mut checks = f.verify(md.quantum_dims());
    if n <= ASSOCIATIVITY_MAX_SECTORS {
        let bad = f.associativity_violations();
        checks.push("fusion_associative", bad == 0, format!("{bad} violations"));
    }
    if oracle_check {
        let oracle = fusion_oracle_su2(a.k)?;
        let diff = (0..n)
            .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
            .filter(|&(x, y, z)| f.get(x, y, z) != oracle.get(x, y, z))
            .count();
        checks.push("su2_oracle", diff == 0, format!("{diff} of {} coefficients differ", n * n * n));
    }
    let result = json!({
        "labels": md.weights().iter().map(|w| w.labels().to_vec()).collect::<Vec<_>>(),
        "nonzero": nonzero,
    });
    let human = format!(
        "SU({})_{}: {} non-zero fusion coefficients [a, b, c, N]\n",
        a.n,
        a.k,
        nonzero_count(&result)
    );
    Ok(Outcome::new(result, checks, human))
}

fn nonzero_count(v: &Value) -> usize {
    v["nonzero"].as_array().map_or(0, Vec::len)
}

fn dims(a: &Alcove, opts: &BuildOptions) -> Result<Outcome, CliError> {
    let md = build_modular_data_with(a.n, a.k, opts)?;
    let product: Vec<f64> = md.weights().iter().map(quantum_dimension).collect();
    let err = md
        .quantum_dims()
        .iter()
        .zip(&product)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    let mut checks = Report::new();
    checks.push(
        "dims_match_product_formula",
        err < DIMS_TOL,
        format!("max |S_λ0/S_00 − Π| = {err:.3e}"),
    );
    let mut human = format!("SU({})_{}: μ = {:.10}\n", a.n, a.k, md.global_dimension());
    for (w, d) in md.weights().iter().zip(md.quantum_dims()) {
        let _ = writeln!(human, "  {:?}  d = {d:.10}", w.labels());
    }
    let result = json!({
        "labels": md.weights().iter().map(|w| w.labels().to_vec()).collect::<Vec<_>>(),
        "dims": md.quantum_dims(),
        "global_dimension": md.global_dimension(),
    });
    Ok(Outcome::new(result, checks, human))
}

fn exp_levelrank(n: u32, m: u32) -> Result<Outcome, CliError> {
    let exp = exp_set_levelrank(n, m)?;
    let mut human = format!("exp for SU({n})_{m} × SU({m})_{n} ⊂ SU({})_1: {} members\n", n * m, exp.len());
    let members: Vec<Value> = exp
        .pairs()
        .zip(exp.pairings())
        .map(|((w, p), info)| {
            let _ = writeln!(human, "  {w}  ↔  {p}{}", if info.resolved_by_rule { "  (rule)" } else { "" });
            json!({
                "labels": w.labels(),
                "partner": p.labels(),
                "h": w.conformal_weight().exact.to_string(),
                "partner_h": p.conformal_weight().exact.to_string(),
                "integral_candidates": info.integral_candidates,
                "resolved_by_rule": info.resolved_by_rule,
            })
        })
        .collect();
    let result = json!({"count": exp.len(), "members": members});
    Ok(Outcome::new(result, Report::new(), human))
}

fn exp_diagonal(n: u32, levels: &[u32]) -> Result<Outcome, CliError> {
    let spec = NormalSubnetSpec::diagonal(n, levels)?;
    let d = spec.diagonal_exp().expect("diagonal context");
    let mut human = format!(
        "exp for SU({n})_{} ⊂ Π SU({n})_{:?}: {} members, coset c = {}\n",
        d.level(),
        levels,
        d.members().len(),
        d.coset_central_charge()
    );
    let members: Vec<Value> = d
        .members()
        .iter()
        .map(|w| {
            let ph = d.partner_h_mod1(w).expect("member");
            let _ = writeln!(human, "  {w}  h(1,λ) ≡ {ph}");
            json!({
                "labels": w.labels(),
                "h": w.conformal_weight().exact.to_string(),
                "partner_h_mod1": ph.to_string(),
            })
        })
        .collect();
    let result = json!({
        "count": members.len(),
        "coset_c": d.coset_central_charge().to_string(),
        "members": members,
    });
    Ok(Outcome::new(result, Report::new(), human))
}

fn pair(n: u32, m: u32, weight: &[u32]) -> Result<Outcome, CliError> {
    let w = AffineWeight::new(n, m, weight.to_vec())?;
    let p = mirror_pair_detailed(&w)?;
    let s = w.conformal_weight().exact + p.partner.conformal_weight().exact;
    let mut checks = Report::new();
    checks.push("pair_h_integral", s.is_integer(), format!("h(λ) + h(λ̃) = {s}"));
    let result = json!({
        "weight": weight_json(&w),
        "partner": weight_json(&p.partner),
        "labels": p.partner.labels(),
        "integral_candidates": p.integral_candidates,
        "resolved_by_rule": p.resolved_by_rule,
    });
    let human = format!("SU({n})_{m} {w}  ↔  SU({m})_{n} {}\n", p.partner);
    Ok(Outcome::new(result, checks, human))
}

fn mirror(
    spec: &NormalSubnetSpec,
    path: &Path,
    out: Option<&PathBuf>,
    opts: &BuildOptions,
) -> Result<Outcome, CliError> {
    let file: SpectrumFile = read_json(path)?;
    let rho = file.to_spectrum()?;
    let m = mirror_extension(spec, &rho)?;
    let checks = mirror_report(spec, &rho, opts)?;
    let entries: Vec<Value> = m
        .entries
        .iter()
        .map(|(label, mult)| match label {
            MirrorLabel::Weight(w) => json!({"labels": w.labels(), "mult": mult, "display": w.to_string()}),
            MirrorLabel::Coset(c) => json!({
                "factor_levels": c.levels,
                "labels": c.weight.labels(),
                "h_mod1": c.h_mod1.to_string(),
                "mult": mult,
                "display": c.to_string(),
            }),
        })
        .collect();
    let mut result = json!({
        "source": file,
        "entries": entries,
        "index": m.index,
        "source_index": m.source_index,
        "index_assumed": m.index_assumed,
        "warnings": m.warnings,
    });
    if let Some(c) = m.coset_central_charge() {
        result["coset_c"] = json!(c.to_string());
    }
    let mirror_file = m.as_spectrum().map(|s| SpectrumFile::from_spectrum(&s));
    if let Some(f) = &mirror_file {
        result["spectrum"] = json!(f);
    }
    if let Some(p) = out {
        match &mirror_file {
            Some(f) => write_json(p, f)?,
            None => write_json(p, &result)?,
        }
    }
    let mut human = format!("{rho}\n  ↦ {m}\nindex {:.10}", m.index);
    if m.index_assumed {
        human.push_str(" (carried over from the A side)");
    }
    human.push('\n');
    if let Some(c) = m.coset_central_charge() {
        let _ = writeln!(human, "coset c = {c}");
    }
    Ok(Outcome::new(result, checks, human))
}

fn load_catalog(trusted: bool) -> Result<Catalog, CliError> {
    Ok(catalog_file::parse(catalog_file::SHIPPED_CATALOG, trusted)?)
}

fn levelrank_record(cat: &Catalog, name: &str) -> Option<LevelRankRecord> {
    cat.levelrank.iter().copied().find(|r| r.name() == name)
}

fn catalog(cmd: &CatalogCommand, trusted: bool, opts: &BuildOptions) -> Result<Outcome, CliError> {
    if let CatalogCommand::Derive { out } = cmd {
        let file = catalog_file::derive_file(opts)?;
        if let Some(p) = out {
            std::fs::write(p, catalog_file::render(&file)).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
        }
        let human = format!("derived {} inclusions, {} level-rank instances\n", file.inclusions.len(), file.levelrank.len());
        return Ok(Outcome::new(json!(file), Report::new(), human));
    }
    let cat = load_catalog(trusted)?;
    let unknown = |name: &str| CliError::Usage(format!("no catalog entry named {name:?}; see `mirext catalog list`"));
    match cmd {
        CatalogCommand::List => {
            let mut human = String::new();
            let inclusions: Vec<Value> = cat
                .inclusions
                .iter()
                .map(|r| {
                    let _ = writeln!(human, "{:<14} {:<28} {}", r.name, r.label(), r.provenance.as_str());
                    json!({
                        "name": r.name,
                        "label": r.label(),
                        "provenance": r.provenance.as_str(),
                        "families": r.families.iter().map(|f| f.as_str()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let levelrank: Vec<String> = cat.levelrank.iter().map(LevelRankRecord::name).collect();
            let _ = writeln!(human, "{} level-rank instances (levelrank_N_M)", levelrank.len());
            Ok(Outcome::new(
                json!({"inclusions": inclusions, "levelrank": levelrank}),
                Report::new(),
                human,
            ))
        }
        CatalogCommand::Show { name } => {
            if let Some(r) = cat.find(name) {
                let checks = validate_inclusion_quick(r)?;
                let human = format!("{}  {}\n  vacuum: {}\n", r.name, r.label(), r.vacuum_spectrum);
                return Ok(Outcome::new(json!(inclusion_entry(r)), checks, human));
            }
            let r = levelrank_record(&cat, name).ok_or_else(|| unknown(name))?;
            let exp = exp_set_levelrank(r.n, r.m)?;
            let pairs: Vec<Value> = exp.pairs().map(|(a, b)| json!([a.labels(), b.labels()])).collect();
            let human = format!("{}: exp has {} members\n", r.name(), exp.len());
            Ok(Outcome::new(
                json!({"name": r.name(), "n": r.n, "m": r.m, "exp": pairs}),
                Report::new(),
                human,
            ))
        }
        CatalogCommand::Validate { name } => {
            if let Some(r) = cat.find(name) {
                let md = build_modular_data_with(r.n, r.k, opts)?;
                let checks = validate_inclusion(r, &md);
                let human = format!("{}  {}\n", r.name, r.label());
                return Ok(Outcome::new(json!({"name": r.name}), checks, human));
            }
            let r = levelrank_record(&cat, name).ok_or_else(|| unknown(name))?;
            let mut checks = verify_levelrank_invariant(r.n, r.m, opts)?;
            let ctx = LevelRankContext::new(r.n, r.m, opts)?;
            checks.extend(verify_ring_isomorphism(&ctx)?);
            let human = format!("{}\n", r.name());
            Ok(Outcome::new(json!({"name": r.name()}), checks, human))
        }
        CatalogCommand::Derive { .. } => unreachable!("handled above"),
    }
}

fn matrix_json(z: &MassMatrix) -> Value {
    json!({
        "matrix": z.rows(),
        "vacuum_row": crate::files::entries_of(&z.vacuum_row()),
        "symmetric": z.is_symmetric(),
        "permutation": z.is_permutation(),
    })
}

fn modinv_search(a: &Alcove, bound: u32, opts: &BuildOptions) -> Result<Outcome, CliError> {
    let md = build_modular_data_with(a.n, a.k, opts)?;
    let found = commutant_search(&md, bound)?;
    let mut checks = Report::new();
    let mut human = format!("SU({})_{}: {} invariants with entries ≤ {bound}\n", a.n, a.k, found.len());
    for (i, z) in found.iter().enumerate() {
        let v = verify_invariant(z, &md);
        checks.push(
            format!("invariant_{i}"),
            v.passed(),
            v.checks.iter().map(|c| c.detail.as_str()).collect::<Vec<_>>().join("; "),
        );
        let _ = writeln!(human, "  #{i}: vacuum row {}", z.vacuum_row());
    }
    let result = json!({
        "count": found.len(),
        "invariants": found.iter().map(matrix_json).collect::<Vec<_>>(),
    });
    Ok(Outcome::new(result, checks, human))
}

fn modinv_verify(path: &Path, a: &Alcove, opts: &BuildOptions) -> Result<Outcome, CliError> {
    let file: MassMatrixFile = read_json(path)?;
    if (file.n, file.k) != (a.n, a.k) {
        return Err(CliError::Usage(format!(
            "{} is for SU({})_{}, not SU({})_{}",
            path.display(),
            file.n,
            file.k,
            a.n,
            a.k
        )));
    }
    let z = file.to_matrix()?;
    let md = build_modular_data_with(a.n, a.k, opts)?;
    let checks = verify_invariant(&z, &md);
    let human = format!("SU({})_{}: vacuum row {}\n", a.n, a.k, z.vacuum_row());
    Ok(Outcome::new(matrix_json(&z), checks, human))
}

fn reproduce_paper(opts: &BuildOptions) -> Result<Outcome, CliError> {
    let outcomes = reproduce::run_all(opts);
    let mut checks = Report::new();
    let mut human = String::new();
    for o in &outcomes {
        let _ = writeln!(human, "{}", o.line());
        checks.push(format!("criterion_{}", o.id), o.pass, o.detail.clone());
    }
    let result = json!({
        "criteria": outcomes.iter().map(|o| json!({
            "id": o.id,
            "title": o.title,
            "pass": o.pass,
            "detail": o.detail,
            "seconds": o.elapsed.as_secs_f64(),
            "budget_seconds": o.budget.as_secs_f64(),
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        show_checks: false,
        ..Outcome::new(result, checks, human)
    })
}
