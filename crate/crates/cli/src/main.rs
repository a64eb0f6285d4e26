//! `flagtract` command-line front end. Every command prints one JSON document
//! `{"ok": .., "result": .., "witness": ..}` on stdout and exits with 0 on success, 1 on a
//! negative verdict and 2 on bad input.

mod scenario;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use flagtract::enumerate::{self, EnumerationReport};
use flagtract::json::{self, flag_to_json, matroid_to_json};
use flagtract::subset::Mask;
use flagtract::{Error, FMatroid, FlagMatroid, FlagMode, GpMode, Verdict};
use serde_json::{json, Value as Json};

#[derive(Parser)]
#[command(name = "flagtract", version, about = "Matroids and flag matroids over tracts")]
struct Cli {
    /// Worker threads for enumeration and searches (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GpModeArg {
    Full,
    ThreeTerm,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlagModeArg {
    Pairwise,
    Adjacent,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Grassmann-Plücker relations of a function.
    Validate {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "full")]
        mode: GpModeArg,
    },
    /// Circuit representatives of a matroid.
    Circuits { input: PathBuf },
    /// Cocircuit representatives of a matroid.
    Cocircuits { input: PathBuf },
    Dual { input: PathBuf },
    /// Delete and contract disjoint sets of 1-based elements.
    Minor {
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        delete: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        contract: Vec<usize>,
    },
    /// Whether `--m` is a quotient of `--n`.
    Quotient {
        #[arg(long = "n")]
        big: PathBuf,
        #[arg(long = "m")]
        small: PathBuf,
    },
    FlagValidate {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "pairwise")]
        mode: FlagModeArg,
    },
    /// Cocircuits of each component are covectors of every later component.
    CryptoCheck { input: PathBuf },
    FlagDual { input: PathBuf },
    FlagMinor {
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        delete: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        contract: Vec<usize>,
    },
    /// Push a matroid or flag forward along a tract morphism.
    Pushforward {
        input: PathBuf,
        /// terminal, regular, sign_to_k, field_to_k, rationals_to_sign,
        /// rationals_to_tropical[(p)], ff_inclusion
        #[arg(long)]
        morphism: String,
        #[arg(long)]
        target: Option<String>,
    },
    Subflag {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        indices: Vec<usize>,
    },
    /// Flag of minors of a matroid on {1..n+p} cut down to {1..n}.
    FlagsOfMinors {
        input: PathBuf,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        cuts: Vec<usize>,
    },
    /// Single-element extension of a rank (r, r+1) flag; the new element is n+1.
    Lift {
        input: PathBuf,
        /// Scale of the first component, as an element encoding.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
    },
    Enumerate {
        #[arg(long)]
        tract: String,
        #[arg(long, value_delimiter = ',', required = true)]
        ranks: Vec<usize>,
        #[arg(long = "n")]
        n: usize,
        /// Include the items in the result.
        #[arg(long)]
        items: bool,
        /// Write one item per line to this file.
        #[arg(long)]
        stream: Option<PathBuf>,
    },
    /// Specialization order on Krasner flags.
    Poset {
        #[arg(long, value_delimiter = ',', required = true)]
        ranks: Vec<usize>,
        #[arg(long = "n")]
        n: usize,
    },
    /// Flags over a finite tract lying over a Krasner flag.
    ReprSearch {
        input: PathBuf,
        #[arg(long)]
        tract: String,
    },
    /// Search a regular representation of a binary and orientable Krasner flag.
    Regularity { input: PathBuf },
    /// Run a bundled scenario against its expected verdicts.
    Scenario { name: String },
}

struct Output {
    ok: bool,
    result: Json,
    witness: Option<Json>,
}

impl Output {
    fn value(result: Json) -> Self {
        Output { ok: true, result, witness: None }
    }

    fn verdict(v: Verdict) -> Self {
        Output {
            ok: v.ok,
            result: Json::Bool(v.ok),
            witness: v.witness.map(|w| serde_json::to_value(w).expect("witnesses serialize")),
        }
    }
}

type Run = Result<Output, Error>;

fn read_input(path: &PathBuf) -> Result<Json, Error> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    };
    json::parse(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_matroid(path: &PathBuf) -> Result<FMatroid, Error> {
    json::matroid_from_json(&read_input(path)?, "$")
}

fn read_flag(path: &PathBuf) -> Result<FlagMatroid, Error> {
    json::flag_from_json(&read_input(path)?, "$")
}

fn mask(elems: &[usize], n: usize) -> Result<Mask, Error> {
    let mut m = 0;
    for &e in elems {
        if e == 0 || e > n {
            return Err(Error::Invalid(format!("element {e} outside 1..{n}")));
        }
        m |= 1 << (e - 1);
    }
    Ok(m)
}

fn report_json(r: &EnumerationReport) -> Json {
    let mut out = json!({
        "tract": json::tract_to_json(r.tract),
        "n": r.n,
        "ranks": r.ranks,
        "count": r.count,
    });
    if let Some(items) = &r.items {
        out["items"] = items.iter().map(flag_to_json).collect();
    }
    out
}

fn run(cmd: Command) -> Run {
    match cmd {
        Command::Validate { input, mode } => {
            let g = json::gp_from_json(&read_input(&input)?, "$")?;
            let mode = match mode {
                GpModeArg::Full => GpMode::Full,
                GpModeArg::ThreeTerm => GpMode::ThreeTerm,
            };
            Ok(Output::verdict(g.validate(mode)?))
        }
        Command::Circuits { input } => Ok(Output::value(json::family_to_json(&read_matroid(&input)?.circuits()))),
        Command::Cocircuits { input } => {
            Ok(Output::value(json::family_to_json(&read_matroid(&input)?.cocircuits())))
        }
        Command::Dual { input } => Ok(Output::value(matroid_to_json(&read_matroid(&input)?.dual()))),
        Command::Minor { input, delete, contract } => {
            let m = read_matroid(&input)?;
            let n = m.ground_size();
            Ok(Output::value(matroid_to_json(&m.minor(mask(&delete, n)?, mask(&contract, n)?)?)))
        }
        Command::Quotient { big, small } => {
            Ok(Output::verdict(flagtract::quotient_check(&read_matroid(&big)?, &read_matroid(&small)?)?))
        }
        Command::FlagValidate { input, mode } => {
            let mode = match mode {
                FlagModeArg::Pairwise => FlagMode::Pairwise,
                FlagModeArg::Adjacent => FlagMode::Adjacent,
            };
            Ok(Output::verdict(read_flag(&input)?.validate(mode)?))
        }
        Command::CryptoCheck { input } => Ok(Output::verdict(read_flag(&input)?.cryptomorphic_check())),
        Command::FlagDual { input } => Ok(Output::value(flag_to_json(&read_flag(&input)?.dual()))),
        Command::FlagMinor { input, delete, contract } => {
            let f = read_flag(&input)?;
            let n = f.ground_size();
            Ok(Output::value(flag_to_json(&f.minor(mask(&delete, n)?, mask(&contract, n)?)?)))
        }
        Command::Pushforward { input, morphism, target } => {
            let v = read_input(&input)?;
            let target = target.as_deref().map(json::tract_from_name).transpose()?;
            if v.get("components").is_some() {
                let f = json::flag_from_json(&v, "$")?;
                let m = json::morphism_from_name(&morphism, f.tract(), target)?;
                Ok(Output::value(flag_to_json(&f.pushforward(&m)?)))
            } else {
                let f = json::matroid_from_json(&v, "$")?;
                let m = json::morphism_from_name(&morphism, f.tract(), target)?;
                Ok(Output::value(matroid_to_json(&f.pushforward(&m)?)))
            }
        }
        Command::Subflag { input, indices } => {
            Ok(Output::value(flag_to_json(&read_flag(&input)?.subflag(&indices)?)))
        }
        Command::FlagsOfMinors { input, n, cuts } => {
            let f = flagtract::flags_of_minors(&read_matroid(&input)?, n, &cuts)?;
            let v = f.validate(FlagMode::Pairwise)?;
            Ok(Output { ok: v.ok, result: flag_to_json(&f), witness: v.witness.map(|w| json!(w)) })
        }
        Command::Lift { input, alpha, beta } => {
            let f = read_flag(&input)?;
            let t = f.tract();
            let scale = |s: Option<String>| -> Result<_, Error> {
                match s {
                    None => Ok(t.one()),
                    Some(s) => json::element_from_json(t, &json::parse(&s)?, "scale"),
                }
            };
            match f.lift(&scale(alpha)?, &scale(beta)?) {
                Ok(m) => Ok(Output::value(matroid_to_json(&m))),
                Err(Error::NotGp(msg)) => Ok(Output { ok: false, result: Json::Null, witness: Some(json!(msg)) }),
                Err(e) => Err(e),
            }
        }
        Command::Enumerate { tract, ranks, n, items, stream } => {
            let t = json::tract_from_name(&tract)?;
            let keep = items || stream.is_some();
            let mut report = if ranks.len() == 1 {
                enumerate::enumerate_matroids(t, ranks[0], n, keep)?
            } else {
                enumerate::enumerate_flag_matroids(t, &ranks, n, keep)?
            };
            eprintln!("enumerated {} items in {:.3?}", report.count, report.elapsed);
            if let Some(path) = stream {
                let mut out = std::io::BufWriter::new(
                    std::fs::File::create(&path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?,
                );
                for f in report.items.iter().flatten() {
                    writeln!(out, "{}", flag_to_json(f)).map_err(|e| Error::Invalid(e.to_string()))?;
                }
                out.flush().map_err(|e| Error::Invalid(e.to_string()))?;
                if !items {
                    report.items = None;
                }
            }
            Ok(Output::value(report_json(&report)))
        }
        Command::Poset { ranks, n } => {
            let p = enumerate::k_specialization_poset(&ranks, n)?;
            Ok(Output::value(json!({
                "nodes": p.nodes.iter().map(flag_to_json).collect::<Vec<_>>(),
                "covers": p.covers,
                "top": p.top,
                "antisymmetric": p.is_antisymmetric(),
            })))
        }
        Command::ReprSearch { input, tract } => {
            let fk = read_flag(&input)?;
            let found = enumerate::representation_search(&fk, json::tract_from_name(&tract)?)?;
            Ok(Output {
                ok: !found.is_empty(),
                result: found.iter().map(flag_to_json).collect(),
                witness: None,
            })
        }
        Command::Regularity { input } => {
            let out = enumerate::regularity_pipeline(&read_flag(&input)?)?;
            let opt = |f: &Option<FlagMatroid>| f.as_ref().map_or(Json::Null, flag_to_json);
            Ok(Output {
                ok: out.regular.is_some(),
                result: json!({
                    "regular": opt(&out.regular),
                    "binary": opt(&out.binary),
                    "oriented": opt(&out.oriented),
                    "extension": out.extension.as_ref().map_or(Json::Null, matroid_to_json),
                }),
                witness: out.reason.map(|r| json!({"kind": "no_representation", "reason": r})),
            })
        }
        Command::Scenario { name } => scenario::run(&name),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build() {
            Ok(pool) => pool.install(|| run(cli.command)),
            Err(e) => Err(Error::Invalid(format!("thread pool: {e}"))),
        },
        None => run(cli.command),
    };
    let (doc, code) = match result {
        Ok(out) => {
            let mut doc = json!({"ok": out.ok, "result": out.result});
            if let Some(w) = out.witness {
                doc["witness"] = w;
            }
            (doc, if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("flagtract: {e}");
            (json!({"ok": false, "error": e.to_string()}), 2)
        }
    };
    println!("{doc}");
    ExitCode::from(code)
}

