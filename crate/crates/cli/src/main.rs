//! Command-line driver: every library operation behind one subcommand, with
//! human-readable or JSON output. Exit codes: 0 success, 1 domain error,
//! 2 usage error, 3 search budget exhausted.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use twobridge::bridge::{
    knot_class, phi, phi_inverse_knot, phi_inverse_link, word_fraction, Kind, TwoBridgeClass,
};
use twobridge::diagram::{build_diagram, render};
use twobridge::oracle::{agreement_sweep, SearchBudget};
use twobridge::order::{
    compare, construct_upper_bound, incomparable_partners, lower_bounds, shortest_lubs, std_forms,
    upper_bound_exists,
};
use twobridge::rational::even_expansion;
use twobridge::{Error, ExpandedWord, Fraction};

#[derive(Parser)]
#[command(
    name = "bridge-order",
    version,
    about = "Decide and construct order relationships between 2-bridge knots",
    long_about = "Exact decision procedures for the partial order on 2-bridge knots and links: \
continued-fraction normal forms, word parsing, upper/lower bounds, an independent \
brute-force oracle, and diagram rendering. Fractions are written p/q, words [2,-2,0,-2]."
)]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a fraction: canonical class, kind, expansions, word preimage.
    Info { fraction: String },
    /// The word class (knot) or word-class pair (link) of a fraction.
    Word { fraction: String },
    /// The knot or link of a word.
    Knot { word: String },
    /// Order relation between two knots.
    Compare { left: String, right: String },
    /// All lower bounds of a knot.
    LowerBounds {
        fraction: String,
        /// Include the unknot (always a lower bound).
        #[arg(long)]
        include_unknot: bool,
    },
    /// Whether the given knots have a common upper bound; constructs one.
    UpperBound {
        #[arg(num_args = 2.., required = true)]
        fractions: Vec<String>,
    },
    /// Shortest least upper bounds of two knots.
    Lub { left: String, right: String },
    /// Incomparable knots sharing a standard-form base, up to an exponent cap.
    Partners {
        fraction: String,
        #[arg(long, default_value_t = 6)]
        q_max: u64,
    },
    /// Standard-form decompositions of a word.
    Stdform { word: String },
    /// Render the path-in-product picture of a double parsing.
    Diagram {
        a: String,
        b: String,
        c: String,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
    },
    /// Brute-force verification commands.
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Cross-check the upper-bound decision against the brute-force search
    /// on all word-class pairs up to a length cap.
    Verify {
        #[arg(long)]
        max_len: usize,
        /// Cap on examined candidate words.
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

enum CliError {
    Usage(String),
    Domain(String),
    Budget(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted => CliError::Budget(e.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

fn parse_fraction(s: &str) -> Result<Fraction, CliError> {
    let (p, q) = s
        .split_once('/')
        .ok_or_else(|| CliError::Usage(format!("expected a fraction p/q, got {s:?}")))?;
    let p: BigInt = p
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad numerator {p:?}")))?;
    let q: BigInt = q
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad denominator {q:?}")))?;
    if !p.gcd(&q).is_one() {
        return Err(CliError::Domain(format!(
            "fraction {s} is not reduced; divide out the common factor first"
        )));
    }
    Fraction::new(p, q).map_err(|e| CliError::Domain(e.to_string()))
}

fn parse_class_arg(s: &str) -> Result<TwoBridgeClass, CliError> {
    Ok(knot_class(&parse_fraction(s)?))
}

fn require_knot(k: &TwoBridgeClass) -> Result<(), CliError> {
    if k.kind() == Kind::Link {
        return Err(CliError::Domain(format!(
            "{k} is a link; this operation requires a knot (odd denominator)"
        )));
    }
    Ok(())
}

fn parse_word_arg(s: &str) -> Result<ExpandedWord, CliError> {
    s.parse()
        .map_err(|e: Error| CliError::Usage(e.to_string()))
}

fn fraction_str(f: &Fraction) -> String {
    format!("{}/{}", f.num(), f.den())
}

fn emit<T: Serialize>(json: bool, value: &T, human: String) {
    if json {
        println!("{}", serde_json::to_string(value).expect("serializable"));
    } else {
        println!("{human}");
    }
}

#[derive(Serialize)]
struct ExpansionOut {
    integer_part: String,
    word: String,
}

#[derive(Serialize)]
#[serde(untagged)]
enum PreimageOut {
    Unknot {
        unknot: bool,
    },
    Knot {
        word_class: ExpandedWord,
    },
    Link {
        word_classes: (ExpandedWord, ExpandedWord),
        coincide: bool,
    },
}

fn preimage_of(k: &TwoBridgeClass) -> Result<PreimageOut, CliError> {
    Ok(if k.kind() == Kind::Unknot {
        PreimageOut::Unknot { unknot: true }
    } else if k.kind() == Kind::Knot {
        PreimageOut::Knot {
            word_class: phi_inverse_knot(k)?.canonical().clone(),
        }
    } else {
        let pre = phi_inverse_link(k)?;
        PreimageOut::Link {
            word_classes: (
                pre.classes.0.canonical().clone(),
                pre.classes.1.canonical().clone(),
            ),
            coincide: pre.coincide,
        }
    })
}

fn preimage_human(p: &PreimageOut) -> String {
    match p {
        PreimageOut::Unknot { .. } => "the unknot has no word representative".to_string(),
        PreimageOut::Knot { word_class } => format!("word class: {word_class}"),
        PreimageOut::Link {
            word_classes,
            coincide,
        } => format!(
            "word classes: {} and {}{}",
            word_classes.0,
            word_classes.1,
            if *coincide { " (coincide)" } else { "" }
        ),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Info { fraction } => {
            let f = parse_fraction(&fraction)?;
            let k = knot_class(&f);
            let expansions: Vec<ExpansionOut> = even_expansion(&f)
                .iter()
                .map(|e| ExpansionOut {
                    integer_part: e.integer_part.to_string(),
                    word: {
                        let entries: Vec<String> =
                            e.word.entries().iter().map(|x| x.to_string()).collect();
                        format!("[{}]", entries.join(","))
                    },
                })
                .collect();
            let preimage = preimage_of(&k)?;
            #[derive(Serialize)]
            struct InfoOut {
                input: String,
                class: String,
                kind: Kind,
                expansions: Vec<ExpansionOut>,
                #[serde(flatten)]
                preimage: PreimageOut,
            }
            let out = InfoOut {
                input: fraction.clone(),
                class: k.to_string(),
                kind: k.kind(),
                expansions,
                preimage,
            };
            let kind_name = match k.kind() {
                Kind::Unknot => "unknot",
                Kind::Knot => "knot",
                Kind::Link => "link",
            };
            let mut human = format!("{fraction} -> {k} ({kind_name})\n");
            for e in &out.expansions {
                human.push_str(&format!(
                    "  expansion: integer part {}, word {}\n",
                    e.integer_part, e.word
                ));
            }
            human.push_str(&format!("  {}", preimage_human(&out.preimage)));
            emit(cli.json, &out, human);
        }
        Cmd::Word { fraction } => {
            let k = parse_class_arg(&fraction)?;
            let preimage = preimage_of(&k)?;
            emit(cli.json, &preimage, preimage_human(&preimage));
        }
        Cmd::Knot { word } => {
            let a = parse_word_arg(&word)?;
            let k = phi(&a);
            let f = word_fraction(&a);
            #[derive(Serialize)]
            struct KnotOut {
                fraction: String,
                class: String,
                kind: Kind,
            }
            let out = KnotOut {
                fraction: fraction_str(&f),
                class: k.to_string(),
                kind: k.kind(),
            };
            emit(
                cli.json,
                &out,
                format!("{} -> {} (value {})", word, k, out.fraction),
            );
        }
        Cmd::Compare { left, right } => {
            let k1 = parse_class_arg(&left)?;
            let k2 = parse_class_arg(&right)?;
            let rel = compare(&k1, &k2)?;
            #[derive(Serialize)]
            struct CompareOut {
                relation: twobridge::order::Relation,
            }
            let human = match rel.relation {
                twobridge::order::Relation::Greater => format!("{k1} > {k2}"),
                twobridge::order::Relation::Less => format!("{k1} < {k2}"),
                twobridge::order::Relation::Equal => format!("{k1} = {k2}"),
                twobridge::order::Relation::Incomparable => {
                    format!("{k1} and {k2} are incomparable")
                }
            };
            emit(
                cli.json,
                &CompareOut {
                    relation: rel.relation,
                },
                human,
            );
        }
        Cmd::LowerBounds {
            fraction,
            include_unknot,
        } => {
            let k = parse_class_arg(&fraction)?;
            require_knot(&k)?;
            let bounds = lower_bounds(&k, include_unknot)?;
            #[derive(Serialize)]
            struct BoundsOut {
                lower_bounds: Vec<String>,
            }
            let names: Vec<String> = bounds.iter().map(|b| b.to_string()).collect();
            emit(
                cli.json,
                &BoundsOut {
                    lower_bounds: names.clone(),
                },
                names.join("\n"),
            );
        }
        Cmd::UpperBound { fractions } => {
            let ks = fractions
                .iter()
                .map(|s| parse_class_arg(s))
                .collect::<Result<Vec<_>, _>>()?;
            for k in &ks {
                require_knot(k)?;
            }
            #[derive(Serialize)]
            struct UpperOut {
                exists: bool,
                #[serde(skip_serializing_if = "Option::is_none")]
                certificate: Option<twobridge::order::UpperBoundCertificate>,
                #[serde(skip_serializing_if = "Option::is_none")]
                witness: Option<ExpandedWord>,
                #[serde(skip_serializing_if = "Option::is_none")]
                fraction: Option<String>,
            }
            let certificate = if ks.len() == 2 {
                upper_bound_exists(&ks[0], &ks[1])?
            } else {
                None
            };
            match construct_upper_bound(&ks) {
                Ok(witness) => {
                    let f = word_fraction(&witness);
                    let out = UpperOut {
                        exists: true,
                        certificate,
                        witness: Some(witness.clone()),
                        fraction: Some(fraction_str(&f)),
                    };
                    emit(
                        cli.json,
                        &out,
                        format!(
                            "upper bound exists: {} = K({})",
                            witness,
                            fraction_str(&f)
                        ),
                    );
                }
                Err(Error::NoUpperBound(_)) => {
                    let out = UpperOut {
                        exists: false,
                        certificate: None,
                        witness: None,
                        fraction: None,
                    };
                    emit(cli.json, &out, "no upper bound exists".to_string());
                }
                Err(e) => return Err(e.into()),
            }
        }
        Cmd::Lub { left, right } => {
            let k1 = parse_class_arg(&left)?;
            let k2 = parse_class_arg(&right)?;
            require_knot(&k1)?;
            require_knot(&k2)?;
            let words = shortest_lubs(&k1, &k2)?;
            #[derive(Serialize)]
            struct LubEntry {
                word: ExpandedWord,
                fraction: String,
            }
            #[derive(Serialize)]
            struct LubOut {
                lubs: Vec<LubEntry>,
            }
            let entries: Vec<LubEntry> = words
                .iter()
                .map(|w| LubEntry {
                    word: w.clone(),
                    fraction: fraction_str(&word_fraction(w)),
                })
                .collect();
            let human = entries
                .iter()
                .map(|e| format!("{} = K({})", e.word, e.fraction))
                .collect::<Vec<_>>()
                .join("\n");
            emit(cli.json, &LubOut { lubs: entries }, human);
        }
        Cmd::Partners { fraction, q_max } => {
            let k = parse_class_arg(&fraction)?;
            require_knot(&k)?;
            let partners = incomparable_partners(&k, q_max)?;
            // Large listing: one record per line in JSON mode.
            #[derive(Serialize)]
            struct PartnerOut {
                fraction: String,
                word: ExpandedWord,
            }
            for p in &partners {
                let word = phi_inverse_knot(p)?.canonical().clone();
                let rec = PartnerOut {
                    fraction: fraction_str(&p.fraction()),
                    word,
                };
                emit(
                    cli.json,
                    &rec,
                    format!("{} {}", p, rec.word),
                );
            }
        }
        Cmd::Stdform { word } => {
            let a = parse_word_arg(&word)?;
            let forms = std_forms(&a);
            #[derive(Serialize)]
            struct FormsOut {
                forms: Vec<twobridge::order::StdForm>,
            }
            let human = forms
                .iter()
                .map(|f| {
                    format!(
                        "e={:?} m={} n={} exponent={}",
                        f.e, f.m, f.n, f.exponent
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            emit(cli.json, &FormsOut { forms }, human);
        }
        Cmd::Diagram {
            a,
            b,
            c,
            output,
            format,
        } => {
            let a = parse_word_arg(&a)?;
            let b = parse_word_arg(&b)?;
            let c = parse_word_arg(&c)?;
            let d = build_diagram(&a, &b, &c)?;
            let fmt = match format {
                Format::Svg => twobridge::diagram::RenderFormat::Svg,
                Format::Ascii => twobridge::diagram::RenderFormat::Ascii,
            };
            let bytes = render(&d, fmt);
            match output {
                Some(path) => std::fs::write(&path, &bytes)
                    .map_err(|e| CliError::Domain(format!("cannot write {path:?}: {e}")))?,
                None => std::io::stdout()
                    .write_all(&bytes)
                    .map_err(|e| CliError::Domain(e.to_string()))?,
            }
        }
        Cmd::Oracle {
            cmd: OracleCmd::Verify { max_len, budget },
        } => {
            let mut search_budget = SearchBudget::default();
            if let Some(b) = budget {
                search_budget.max_candidates = b;
            }
            let records = agreement_sweep(max_len, &search_budget)?;
            let disagreements = records.iter().filter(|r| !r.agree).count();
            // Streamed line-delimited records in JSON mode.
            for r in &records {
                if cli.json {
                    println!("{}", serde_json::to_string(r).expect("serializable"));
                } else if !r.agree {
                    println!("DISAGREE {} vs {}", r.a, r.b);
                }
            }
            #[derive(Serialize)]
            struct SweepSummary {
                pairs: usize,
                disagreements: usize,
            }
            emit(
                cli.json,
                &SweepSummary {
                    pairs: records.len(),
                    disagreements,
                },
                format!(
                    "checked {} pairs, {} disagreements",
                    records.len(),
                    disagreements
                ),
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes instead of panicking on
    // write failure.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
