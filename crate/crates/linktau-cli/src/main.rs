//! Command-line front end for the `linktau` library.
//!
//! Every subcommand reads a `.lmap` document, computes one invariant and
//! prints a short report whose last stdout line is always
//! `RESULT: <value>` on success.  `--format json` replaces the report body
//! with a single JSON object mirroring the text report one key per value;
//! the `RESULT:` line stays.  Exit codes: `0` success, `1` verification
//! failure, `2` usage or parse error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use linktau::homology::{build_universal_cover_complex, h2_rank};
use linktau::lmap::{parse, random_document};
use linktau::wall::{lambda_disc, lambda_sphere, lambda_tilde};
use linktau::{
    intersection_sum, kirk_example, phi, serialize, BiLaurent, EqualityCertificate, Laurent,
    LinkMapDocument, QuotientContext, Relator,
};

/// The bundled example dataset, byte-identical to `kirk_example()`.
const KIRK_GOLDEN: &str = include_str!("../../../data/kirk.lmap");

#[derive(Parser)]
#[command(
    name = "linktau",
    version,
    about = "Exact link-homotopy invariants of immersed spheres in 4-manifolds"
)]
struct Cli {
    /// Report format; the trailing `RESULT:` line is printed either way.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the self-intersection invariants sigma_+ and sigma_-.
    Sigma { file: PathBuf },
    /// Print the Whitney disk obstruction representative tau.
    Tau { file: PathBuf },
    /// Print the reduction Phi(tau) together with its per-disk values.
    PhiTau { file: PathBuf },
    /// Print the final Z_2 invariant omega_+.
    Omega { file: PathBuf },
    /// Check that phi annihilates every relator instance up to a bound.
    CheckRelations {
        /// Optional document supplying sphere data for the R4 family.
        file: Option<PathBuf>,
        /// Exponent bound for the relator sweep.
        #[arg(long, default_value_t = 50)]
        kmax: i64,
    },
    /// Print the Wall pairing of every sphere class with its reduction.
    Wall { file: PathBuf },
    /// Print the second homotopy group rank of the handle complement.
    Pi2 { file: PathBuf },
    /// Re-derive every published value of the example and report each one.
    VerifyPaper {
        /// Dataset to verify; defaults to the bundled example.
        file: Option<PathBuf>,
        /// Exponent window for the quotient queries.
        #[arg(long, default_value_t = 10)]
        window: i64,
        /// Exponent bound for the relator sweep.
        #[arg(long, default_value_t = 50)]
        kmax: i64,
    },
}

// ---- Reports and failures ----

/// What a successful command prints: a text body or a JSON body, and the
/// final `RESULT:` value common to both formats.
struct Report {
    lines: Vec<String>,
    json: serde_json::Value,
    result: String,
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Text => {
            for line in &report.lines {
                println!("{line}");
            }
        }
        Format::Json => println!("{}", report.json),
    }
    println!("RESULT: {}", report.result);
}

/// A failed command: the exit code, a message for stderr and, for
/// verification failures, the report that still belongs on stdout.
struct Failure {
    code: u8,
    message: String,
    report: Option<Report>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
            report: None,
        }
    }

    fn verification(message: impl Into<String>, report: Report) -> Self {
        Failure {
            code: 1,
            message: message.into(),
            report: Some(report),
        }
    }
}

fn load(path: &Path) -> Result<LinkMapDocument, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            emit(&report, cli.format);
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Some(report) = &failure.report {
                emit(report, cli.format);
            }
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Sigma { file } => Ok(cmd_sigma(&load(file)?)),
        Command::Tau { file } => cmd_tau(&load(file)?),
        Command::PhiTau { file } => cmd_phi_tau(&load(file)?),
        Command::Omega { file } => cmd_omega(&load(file)?),
        Command::CheckRelations { file, kmax } => {
            if *kmax < 0 {
                return Err(Failure::usage("kmax must be nonnegative"));
            }
            let r4_data = match file {
                Some(file) => load(file)?.quotient_context(*kmax).r4_data().to_vec(),
                None => Vec::new(),
            };
            cmd_check_relations(*kmax, &r4_data)
        }
        Command::Wall { file } => Ok(cmd_wall(&load(file)?)),
        Command::Pi2 { file } => cmd_pi2(&load(file)?),
        Command::VerifyPaper { file, window, kmax } => {
            if *window < 0 || *kmax < 0 {
                return Err(Failure::usage("window and kmax must be nonnegative"));
            }
            let doc = match file {
                Some(file) => load(file)?,
                None => kirk_example(),
            };
            cmd_verify_paper(&doc, *window, *kmax)
        }
    }
}

// ---- Single-value commands ----

fn cmd_sigma(doc: &LinkMapDocument) -> Report {
    let pair = doc.sigma_pair();
    Report {
        lines: vec![
            format!("sigma_plus = {}", pair.sigma_plus),
            format!("sigma_minus = {}", pair.sigma_minus),
        ],
        json: json!({
            "sigma_plus": pair.sigma_plus.to_string(),
            "sigma_minus": pair.sigma_minus.to_string(),
            "result": pair.to_string(),
        }),
        result: pair.to_string(),
    }
}

/// The unframed-disk precondition is a usage error: the obstruction is
/// undefined, not zero.
fn framed_tau(doc: &LinkMapDocument) -> Result<BiLaurent, Failure> {
    doc.tau_representative()
        .map_err(|e| Failure::usage(e.to_string()))
}

fn cmd_tau(doc: &LinkMapDocument) -> Result<Report, Failure> {
    let tau = framed_tau(doc)?;
    let disks: Vec<(String, String)> = doc
        .whitney_disks()
        .map(|disk| (disk.id.clone(), intersection_sum(disk).to_string()))
        .collect();
    Ok(Report {
        lines: disks
            .iter()
            .map(|(id, value)| format!("I({id}) = {value}"))
            .chain([format!("tau = {tau}")])
            .collect(),
        json: json!({
            "disks": disks
                .iter()
                .map(|(id, value)| json!({"id": id, "intersection_sum": value}))
                .collect::<Vec<_>>(),
            "tau": tau.to_string(),
            "result": tau.to_string(),
        }),
        result: tau.to_string(),
    })
}

fn cmd_phi_tau(doc: &LinkMapDocument) -> Result<Report, Failure> {
    framed_tau(doc)?;
    let total = doc.phi_tau().expect("framed checked");
    let disks: Vec<(String, String)> = doc
        .whitney_disks()
        .map(|disk| (disk.id.clone(), phi(&intersection_sum(disk)).to_string()))
        .collect();
    Ok(Report {
        lines: disks
            .iter()
            .map(|(id, value)| format!("Phi(I({id})) = {value}"))
            .chain([format!("Phi(tau) = {total}")])
            .collect(),
        json: json!({
            "disks": disks
                .iter()
                .map(|(id, value)| json!({"id": id, "phi": value}))
                .collect::<Vec<_>>(),
            "phi_tau": total.to_string(),
            "result": total.to_string(),
        }),
        result: total.to_string(),
    })
}

fn cmd_omega(doc: &LinkMapDocument) -> Result<Report, Failure> {
    framed_tau(doc)?;
    let bit = doc.omega_plus().expect("framed checked");
    let value = u8::from(bit);
    Ok(Report {
        lines: vec![format!("omega_plus = {value}")],
        json: json!({"omega_plus": value, "result": value.to_string()}),
        result: value.to_string(),
    })
}

fn cmd_wall(doc: &LinkMapDocument) -> Report {
    let rows: Vec<(String, String, String, String)> = doc
        .spheres
        .iter()
        .map(|sphere| {
            (
                sphere.id.clone(),
                lambda_disc(&sphere.pairing).to_string(),
                lambda_sphere(sphere).to_string(),
                lambda_tilde(sphere).to_string(),
            )
        })
        .collect();
    let tildes: Vec<&str> = rows.iter().map(|r| r.3.as_str()).collect();
    let result = format!("[{}]", tildes.join(", "));
    Report {
        lines: rows
            .iter()
            .map(|(id, disc, sphere, tilde)| {
                format!(
                    "{id}: lambda_disc = {disc}, lambda_sphere = {sphere}, lambda_tilde = {tilde}"
                )
            })
            .collect(),
        json: json!({
            "spheres": rows
                .iter()
                .map(|(id, disc, sphere, tilde)| json!({
                    "id": id,
                    "lambda_disc": disc,
                    "lambda_sphere": sphere,
                    "lambda_tilde": tilde,
                }))
                .collect::<Vec<_>>(),
            "result": result,
        }),
        result,
    }
}

fn cmd_pi2(doc: &LinkMapDocument) -> Result<Report, Failure> {
    let complex = build_universal_cover_complex(doc.handles);
    let rank = h2_rank(&complex).map_err(|e| Failure::usage(e.to_string()))?;
    Ok(Report {
        lines: vec![
            format!("handles = {}", doc.handles),
            format!("d1 = {}", complex.d1()),
            format!("pi2 rank = {rank}"),
        ],
        json: json!({
            "handles": doc.handles,
            "d1": complex.d1().to_string(),
            "pi2_rank": rank,
            "result": rank.to_string(),
        }),
        result: rank.to_string(),
    })
}

// ---- Relation sweep ----

/// Probes `phi` on every relator of the `(family, k, l)` grid plus every
/// `R4` instance, returning the number of checks and the survivors.
fn relation_sweep(kmax: i64, r4_data: &[(Laurent, bool)]) -> (u64, Vec<String>) {
    let mut count = 0u64;
    let mut survivors = Vec::new();
    let mut probe = |relator: Relator| {
        count += 1;
        let image = phi(&relator.expand());
        if !image.is_zero() {
            survivors.push(format!("{relator}: image {image}"));
        }
    };
    for k in -kmax..=kmax {
        for l in -kmax..=kmax {
            probe(Relator::R1 { k });
            probe(Relator::R2 { k, l });
            probe(Relator::R3 { k, l });
        }
    }
    for (g, w2) in r4_data {
        for k in -kmax..=kmax {
            probe(Relator::R4 {
                g: g.clone(),
                w2: *w2,
                k,
            });
        }
    }
    (count, survivors)
}

fn cmd_check_relations(kmax: i64, r4_data: &[(Laurent, bool)]) -> Result<Report, Failure> {
    let (count, survivors) = relation_sweep(kmax, r4_data);
    let mut lines = vec![format!(
        "checked {count} relator instances with kmax={kmax}"
    )];
    lines.extend(survivors.iter().map(|s| format!("phi survives on {s}")));
    let failed = survivors.len();
    let result = if failed == 0 { "ok" } else { "FAIL" }.to_string();
    let report = Report {
        json: json!({
            "kmax": kmax,
            "checked": count,
            "failures": survivors,
            "result": result,
        }),
        lines,
        result,
    };
    if failed == 0 {
        Ok(report)
    } else {
        Err(Failure::verification(
            format!("phi fails on {failed} relator instances"),
            report,
        ))
    }
}

// ---- verify-paper checks ----

struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed: false,
            detail: detail.into(),
        }
    }

    fn expect(name: &'static str, got: &str, expected: &str) -> Self {
        if got == expected {
            Check::pass(name, got)
        } else {
            Check::fail(name, format!("got {got}, expected {expected}"))
        }
    }
}

fn check_phi_tau(doc: &LinkMapDocument) -> Check {
    let per_disk: Vec<String> = doc
        .whitney_disks()
        .map(|disk| phi(&intersection_sum(disk)).to_string())
        .collect();
    match doc.phi_tau() {
        Ok(total) => {
            let expected = ["1", "t", "0", "t", "t"];
            let detail = format!("per-disk ({}), total {total}", per_disk.join(", "));
            if per_disk == expected && total.to_string() == "1 + t" {
                Check::pass("phi-tau", detail)
            } else {
                Check::fail(
                    "phi-tau",
                    format!("{detail}, expected per-disk (1, t, 0, t, t) with total 1 + t"),
                )
            }
        }
        Err(e) => Check::fail("phi-tau", e.to_string()),
    }
}

fn check_tau_nonzero(doc: &LinkMapDocument, window: i64) -> Check {
    let tau = match doc.tau_representative() {
        Ok(tau) => tau,
        Err(e) => return Check::fail("tau-nonzero", e.to_string()),
    };
    let context = doc.quotient_context(window);
    match context.is_zero(&tau) {
        Ok(certificate) => {
            let replayed = certificate.verify(&tau, &BiLaurent::zero());
            match &certificate {
                EqualityCertificate::Distinct { witness: "phi", .. } if replayed => {
                    Check::pass("tau-nonzero", format!("window {window}: {certificate}"))
                }
                _ => Check::fail(
                    "tau-nonzero",
                    format!("window {window}: {certificate}, expected DISTINCT via=phi"),
                ),
            }
        }
        Err(e) => Check::fail("tau-nonzero", e.to_string()),
    }
}

fn check_wall(doc: &LinkMapDocument) -> Check {
    let discs: Vec<String> = doc
        .spheres
        .iter()
        .map(|s| lambda_disc(&s.pairing).to_string())
        .collect();
    let tildes_zero = doc.spheres.iter().all(|s| lambda_tilde(s).is_zero());
    let expected = ["t + 1", "t + 1", "t + 1", "t + 1", "2*t + 2"];
    let detail = format!(
        "disc-level ({}), all lambda_tilde zero: {tildes_zero}",
        discs.join(", ")
    );
    if discs == expected && tildes_zero {
        Check::pass("wall", detail)
    } else {
        Check::fail(
            "wall",
            format!("{detail}, expected (t + 1, t + 1, t + 1, t + 1, 2*t + 2) and zero reductions"),
        )
    }
}

fn check_pi2(doc: &LinkMapDocument) -> Check {
    let rank = match h2_rank(&build_universal_cover_complex(doc.handles)) {
        Ok(rank) => rank,
        Err(e) => return Check::fail("pi2", e.to_string()),
    };
    let synthetic =
        (0..=20).all(|n| h2_rank(&build_universal_cover_complex(n)).is_ok_and(|rank| rank == n));
    if rank == 5 && synthetic {
        Check::pass("pi2", format!("rank {rank}; synthetic 0..=20 agree"))
    } else {
        Check::fail(
            "pi2",
            format!("rank {rank} (expected 5), synthetic 0..=20 agree: {synthetic}"),
        )
    }
}

fn random_bilaurent(rng: &mut StdRng, max_exp: i64, max_terms: usize) -> BiLaurent {
    let mut out = BiLaurent::zero();
    for _ in 0..rng.random_range(0..=max_terms) {
        out = out
            + BiLaurent::monomial(
                rng.random_range(-5i64..=5),
                rng.random_range(-max_exp..=max_exp),
                rng.random_range(-max_exp..=max_exp),
            );
    }
    out
}

fn random_relator_sum(rng: &mut StdRng, expansions: &[BiLaurent]) -> BiLaurent {
    let mut out = BiLaurent::zero();
    for _ in 0..rng.random_range(1..=3) {
        let pick = &expansions[rng.random_range(0..expansions.len())];
        out = out + pick * &BiLaurent::monomial(rng.random_range(-3i64..=3), 0, 0);
    }
    out
}

fn check_quotient_engine(window: i64) -> Check {
    let context = QuotientContext::new(window.max(10));
    let mut problems = Vec::new();
    let mut certified = 0;

    for k in -10i64..=10 {
        let x = BiLaurent::monomial(1, k, k);
        let y = BiLaurent::monomial(1, k, 0);
        match context.are_equal(&x, &y) {
            Ok(certificate) if certificate.is_equal() && certificate.verify(&x, &y) => {
                certified += 1;
            }
            outcome => problems.push(format!("s^{k} t^{k} vs s^{k}: {outcome:?}")),
        }
    }
    for value in [BiLaurent::monomial(2, 0, 5), BiLaurent::monomial(2, 1, 1)] {
        match context.is_zero(&value) {
            Ok(certificate)
                if certificate.is_equal() && certificate.verify(&value, &BiLaurent::zero()) =>
            {
                certified += 1;
            }
            outcome => problems.push(format!("{value}: {outcome:?}")),
        }
    }

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let expansions = QuotientContext::new(2).enumerate_relators();
    let mut randomized = 0;
    for _ in 0..1000 {
        let a = random_bilaurent(&mut rng, 3, 4);
        let b = random_bilaurent(&mut rng, 3, 4);
        if phi(&(&a + &b)) == phi(&a) + phi(&b) {
            randomized += 1;
        } else {
            problems.push(format!("phi not additive on {a} and {b}"));
        }
        let reduced = &a + &random_relator_sum(&mut rng, &expansions);
        if phi(&a) == phi(&reduced) {
            randomized += 1;
        } else {
            problems.push(format!("phi changed under reduction: {a} vs {reduced}"));
        }
    }

    if problems.is_empty() {
        Check::pass(
            "quotient-certificates",
            format!("{certified} certified identities, {randomized} randomized checks"),
        )
    } else {
        Check::fail(
            "quotient-certificates",
            format!("{} problems, first: {}", problems.len(), problems[0]),
        )
    }
}

fn check_round_trips(doc: &LinkMapDocument) -> Check {
    let golden = serialize(&kirk_example()) == KIRK_GOLDEN;
    let own = parse(&serialize(doc)).as_ref() == Ok(doc);
    let mut rng = StdRng::seed_from_u64(0x1a9);
    let mut random_ok = 0;
    for index in 0..100 {
        let sample = random_document(&mut rng, &format!("doc{index}"));
        if parse(&serialize(&sample)).as_ref() == Ok(&sample) {
            random_ok += 1;
        }
    }
    let detail = format!(
        "golden byte-exact: {golden}, document round-trip: {own}, random documents {random_ok}/100"
    );
    if golden && own && random_ok == 100 {
        Check::pass("lmap-round-trip", detail)
    } else {
        Check::fail("lmap-round-trip", detail)
    }
}

fn cmd_verify_paper(doc: &LinkMapDocument, window: i64, kmax: i64) -> Result<Report, Failure> {
    let mut checks = vec![
        Check::expect(
            "sigma",
            &doc.sigma_pair().to_string(),
            "(0, t^2 + -4*t + 3)",
        ),
        check_phi_tau(doc),
        check_tau_nonzero(doc, window),
        match doc.omega_plus() {
            Ok(bit) => Check::expect("omega-plus", &u8::from(bit).to_string(), "1"),
            Err(e) => Check::fail("omega-plus", e.to_string()),
        },
    ];

    let context = doc.quotient_context(kmax);
    let (count, survivors) = relation_sweep(kmax, context.r4_data());
    checks.push(if survivors.is_empty() {
        Check::pass(
            "phi-relations",
            format!("{count} instances annihilated (kmax={kmax})"),
        )
    } else {
        Check::fail(
            "phi-relations",
            format!(
                "{} instances survive, first: {}",
                survivors.len(),
                survivors[0]
            ),
        )
    });

    checks.push(check_wall(doc));
    checks.push(check_pi2(doc));
    checks.push(check_quotient_engine(window));
    checks.push(check_round_trips(doc));

    let failed = checks.iter().filter(|c| !c.passed).count();
    let result = if failed == 0 { "PASS" } else { "FAIL" }.to_string();
    let report = Report {
        lines: checks
            .iter()
            .map(|c| {
                format!(
                    "{} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                )
            })
            .collect(),
        json: json!({
            "checks": checks
                .iter()
                .map(|c| json!({
                    "name": c.name,
                    "status": if c.passed { "PASS" } else { "FAIL" },
                    "detail": c.detail,
                }))
                .collect::<Vec<_>>(),
            "result": result,
        }),
        result,
    };
    if failed == 0 {
        Ok(report)
    } else {
        Err(Failure::verification(
            format!("{failed} of {} checks failed", checks.len()),
            report,
        ))
    }
}
