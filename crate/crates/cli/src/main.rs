use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tractvec::compose::{compose, compose_epsilon, flats_from_covectors, CompositionOp};
use tractvec::diagram::PhaseDiagram;
use tractvec::fixtures::{run_all, run_fixture, Report};
use tractvec::io::{fmatroid_from_json, fmatroid_to_json};
use tractvec::properties::{property_check, SumProperty};
use tractvec::tract::pair_sum;
use tractvec::{
    check_circuit_axioms, AxiomMode, Error, FMatroid, FVector, GroundSet, Matrix, Morphism, PropertyVerdict, Scalar,
    Status, Tract,
};

#[derive(Parser)]
#[command(name = "tractvec", version, about = "Exact computations with matroids over tracts")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on the number of candidates an exhaustive search may visit.
    #[arg(long, global = true, default_value_t = tractvec::DEFAULT_MAX_ENUM)]
    max_enum: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// An F-matroid document: a path, `-` for stdin, or inline JSON.
#[derive(Args)]
struct DocArg {
    doc: String,
}

#[derive(Subcommand)]
enum Command {
    /// Tract information.
    #[command(subcommand)]
    Tract(TractCmd),
    /// Build matroid documents.
    #[command(subcommand)]
    Matroid(MatroidCmd),
    /// One circuit per orbit.
    Circuits(DocArg),
    /// One cocircuit per orbit.
    Cocircuits(DocArg),
    /// The row-echelon form of the cocircuits on a basis.
    Rref {
        #[command(flatten)]
        doc: DocArg,
        /// Basis labels, comma separated.
        #[arg(long)]
        basis: String,
    },
    /// The dual, as a document.
    Dual(DocArg),
    /// Membership of a vector in the covectors or vectors.
    Member {
        #[command(flatten)]
        doc: DocArg,
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "vector",
            required_unless_present = "vector"
        )]
        covector: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        vector: Option<String>,
    },
    /// Deletion of the given labels.
    Delete {
        #[command(flatten)]
        doc: DocArg,
        labels: String,
    },
    /// Contraction of the given labels.
    Contract {
        #[command(flatten)]
        doc: DocArg,
        labels: String,
    },
    /// Pushforward along a tract morphism.
    Push {
        #[command(flatten)]
        doc: DocArg,
        /// kappa, sign, ph, abs, sign-tr, ph-tc, abs-tc or incl.
        #[arg(long)]
        morphism: String,
    },
    /// Check the circuit axioms.
    Axioms {
        #[command(flatten)]
        doc: DocArg,
        #[arg(long, conflicts_with = "weak")]
        strong: bool,
        #[arg(long)]
        weak: bool,
    },
    /// Sum properties of two covectors.
    Props {
        #[command(flatten)]
        doc: DocArg,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, group = "prop")]
        weak_closure: bool,
        /// Elimination at this label.
        #[arg(long, group = "prop")]
        elim: Option<String>,
        /// Additive closure at this label; needs --alpha.
        #[arg(long, group = "prop", requires = "alpha")]
        add_closure: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Compose two vectors.
    Compose {
        /// inflation, max or epsilon.
        #[arg(long)]
        op: String,
        #[arg(long)]
        tract: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Matroid whose circuits bound epsilon; required for epsilon.
        #[arg(long)]
        doc: Option<String>,
    },
    /// Flats, and the zero sets of covectors.
    Flats(DocArg),
    /// Run a worked example, or all of them.
    Repro { id: String },
    /// Draw phase diagrams of the cocircuits, or of given vectors.
    Diagram {
        #[command(flatten)]
        doc: DocArg,
        #[arg(long)]
        svg: PathBuf,
        /// JSON list of vectors to draw instead of the cocircuits.
        #[arg(long)]
        vectors: Option<String>,
    },
}

#[derive(Subcommand)]
enum TractCmd {
    /// Multiplication and pairwise-sum tables of a finite tract.
    Table { id: String },
}

#[derive(Subcommand)]
enum MatroidCmd {
    /// The matroid whose covectors are the row space of a matrix.
    FromMatrix {
        #[arg(long)]
        tract: String,
        /// JSON array of rows of literals.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        /// Labels, comma separated.
        #[arg(long)]
        ground: Option<String>,
    },
}

/// Failure classes mapped to exit codes.
enum Fail {
    Math(String),
    Usage(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Axiom(_) | Error::Domain(_) | Error::NotABasis(_) => Fail::Math(e.to_string()),
            _ => Fail::Usage(e.to_string()),
        }
    }
}

type Out = Result<(String, Value, bool), Fail>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((text, value, ok)) => {
            match cli.format {
                Format::Text => print!("{text}"),
                Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("json")),
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(Fail::Math(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn read_doc(arg: &str) -> Result<FMatroid, Fail> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Fail::Usage(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(arg).map_err(|e| Fail::Usage(format!("{arg}: {e}")))?
    };
    Ok(fmatroid_from_json(&text)?)
}

/// A JSON array of literals, or literals separated by whitespace.
fn parse_lits(s: &str) -> Result<Vec<String>, Fail> {
    if s.trim_start().starts_with('[') {
        serde_json::from_str(s).map_err(|e| Fail::Usage(format!("bad vector `{s}`: {e}")))
    } else {
        Ok(s.split_whitespace().map(str::to_string).collect())
    }
}

fn parse_vector(m: &FMatroid, s: &str) -> Result<FVector, Fail> {
    Ok(m.vector(&parse_lits(s)?)?)
}

fn split_labels(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|l| !l.is_empty()).collect()
}

fn vectors_out(title: &str, xs: &[FVector]) -> (String, Value) {
    let mut text = format!("{title} ({}):\n", xs.len());
    for x in xs {
        text += &format!("  {x}\n");
    }
    let v: Vec<Value> = xs
        .iter()
        .map(|x| json!(x.entries().iter().map(|s| s.to_string()).collect::<Vec<_>>()))
        .collect();
    (text, json!({ title: v }))
}

fn verdict_json(v: &PropertyVerdict) -> Value {
    let (status, witness) = match &v.status {
        Status::Proven => ("proven", Value::Null),
        Status::Unknown => ("unknown", Value::Null),
        Status::Refuted(w) => (
            "refuted",
            json!({
                "description": w.description,
                "vectors": w.vectors.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }),
        ),
    };
    json!({ "status": status, "search_bound": v.search_bound, "witness": witness })
}

fn doc_out(m: &FMatroid) -> (String, Value, bool) {
    let s = fmatroid_to_json(m);
    let v: Value = serde_json::from_str(&s).expect("own output parses");
    (s, v, true)
}

fn report_json(r: &Report) -> Value {
    json!({
        "id": r.id,
        "description": r.description,
        "passed": r.passed(),
        "facts": r.facts.iter().map(|f| json!({
            "name": f.name, "expected": f.expected, "observed": f.observed, "passed": f.passed(),
        })).collect::<Vec<_>>(),
    })
}

fn run(cli: &Cli) -> Out {
    let max = cli.max_enum;
    match &cli.command {
        Command::Tract(TractCmd::Table { id }) => tract_table(id),
        Command::Matroid(MatroidCmd::FromMatrix { tract, matrix, ground }) => {
            let t: Tract = tract.parse()?;
            let rows: Vec<Vec<String>> =
                serde_json::from_str(matrix).map_err(|e| Fail::Usage(format!("bad matrix: {e}")))?;
            let mx = Matrix::parse(t, &rows)?;
            let g = match ground {
                Some(g) => GroundSet::new(split_labels(g))?,
                None => GroundSet::numbered(mx.ncols())?,
            };
            Ok(doc_out(&FMatroid::from_subspace(g, &mx)?))
        }
        Command::Circuits(d) => {
            let (t, v) = vectors_out("circuits", read_doc(&d.doc)?.circuits());
            Ok((t, v, true))
        }
        Command::Cocircuits(d) => {
            let (t, v) = vectors_out("cocircuits", read_doc(&d.doc)?.cocircuits());
            Ok((t, v, true))
        }
        Command::Rref { doc, basis } => {
            let m = read_doc(&doc.doc)?;
            let b = m.mask(&split_labels(basis))?;
            let r = m.cocircuit_rref(b)?;
            let rows: Vec<FVector> = r.rows.iter().map(|(_, x)| x.clone()).collect();
            let (t, v) = vectors_out("rows", &rows);
            Ok((format!("basis {}\n{t}", m.ground().format_mask(b)), v, true))
        }
        Command::Dual(d) => Ok(doc_out(&read_doc(&d.doc)?.dual()?)),
        Command::Member { doc, covector, vector } => {
            let m = read_doc(&doc.doc)?;
            let (kind, lit) = match (covector, vector) {
                (Some(c), _) => ("covector", c),
                (None, Some(v)) => ("vector", v),
                (None, None) => return Err(Fail::Usage("give --covector or --vector".into())),
            };
            let x = parse_vector(&m, lit)?;
            let obstruction = if kind == "covector" {
                m.covector_obstruction(&x)?
            } else {
                m.vector_obstruction(&x)?
            };
            let text = match obstruction {
                None => format!("{x} is a {kind}\n"),
                Some(o) => format!("{x} is not a {kind}: not orthogonal to {o}\n"),
            };
            let v = json!({
                "vector": x.to_string(),
                "kind": kind,
                "member": obstruction.is_none(),
                "obstruction": obstruction.map(ToString::to_string),
            });
            Ok((text, v, true))
        }
        Command::Delete { doc, labels } => Ok(doc_out(&read_doc(&doc.doc)?.delete_labels(&split_labels(labels))?)),
        Command::Contract { doc, labels } => Ok(doc_out(&read_doc(&doc.doc)?.contract_labels(&split_labels(labels))?)),
        Command::Push { doc, morphism } => {
            let m = read_doc(&doc.doc)?;
            let f = Morphism::parse(morphism, m.tract())?;
            Ok(doc_out(&m.pushforward(f)?))
        }
        Command::Axioms { doc, weak, .. } => {
            // circuits are read without validation so that bad sets can be diagnosed
            let reps = read_reps(&doc.doc)?;
            let mode = if *weak { AxiomMode::Weak } else { AxiomMode::Strong };
            let v = check_circuit_axioms(&reps, mode)?;
            Ok((format!("{v}\n"), verdict_json(&v), true))
        }
        Command::Props {
            doc,
            x,
            y,
            weak_closure,
            elim,
            add_closure,
            alpha,
        } => {
            let m = read_doc(&doc.doc)?;
            let (x, y) = (parse_vector(&m, x)?, parse_vector(&m, y)?);
            let which = match (weak_closure, elim, add_closure) {
                (true, None, None) => SumProperty::WeakClosure,
                (false, Some(e), None) => SumProperty::Elimination {
                    e: m.ground().index_of(e)?,
                },
                (false, None, Some(e)) => SumProperty::AdditiveClosure {
                    e: m.ground().index_of(e)?,
                    alpha: Scalar::parse(m.tract(), alpha.as_deref().unwrap_or_default())?,
                },
                _ => return Err(Fail::Usage("give one of --weak-closure, --elim, --add-closure".into())),
            };
            let v = property_check(&m, &which, &x, &y, max)?;
            Ok((format!("{v}\n"), verdict_json(&v), true))
        }
        Command::Compose { op, tract, x, y, doc } => {
            let op: CompositionOp = op.parse()?;
            let t: Tract = tract.parse()?;
            let (xl, yl) = (parse_lits(x)?, parse_lits(y)?);
            let g = match doc {
                Some(d) => {
                    let m = read_doc(d)?;
                    if m.tract() != t {
                        return Err(Error::TractMismatch {
                            expected: t,
                            found: m.tract(),
                        }
                        .into());
                    }
                    Some(m)
                }
                None => None,
            };
            let ground = match &g {
                Some(m) => m.ground().clone(),
                None => GroundSet::numbered(xl.len())?,
            };
            let xv = FVector::parse(t, ground.clone(), &xl)?;
            let yv = FVector::parse(t, ground, &yl)?;
            if op == CompositionOp::Epsilon {
                let circuits = g.as_ref().map(|m| m.circuits().to_vec()).unwrap_or_default();
                let r = compose_epsilon(&xv, &yv, &circuits)?;
                let eps = r.epsilon.as_ref().map(tractvec::num::format_rat);
                let mut text = format!("epsilon: {}\n", eps.clone().unwrap_or_else(|| "unconstrained".into()));
                for (eta, z) in &r.witnesses {
                    text += &format!("  eta = {}: {z}\n", tractvec::num::format_rat(eta));
                }
                let w: Vec<Value> = r
                    .witnesses
                    .iter()
                    .map(|(eta, z)| json!({ "eta": tractvec::num::format_rat(eta), "vector": z.to_string() }))
                    .collect();
                return Ok((text, json!({ "epsilon": eps, "witnesses": w }), true));
            }
            let z = compose(op, &xv, &yv)?;
            Ok((format!("{z}\n"), json!({ "result": z.to_string() }), true))
        }
        Command::Flats(d) => {
            let m = read_doc(&d.doc)?;
            let g = m.ground();
            let flats = m.underlying().flats();
            let zero_sets = flats_from_covectors(&m, max)?;
            let fmt_set = |s: u32| format!("{{{}}}", g.labels_of(s).join(","));
            let mut text = String::from("flats:\n");
            for &f in &flats {
                let mark = if zero_sets.contains(&f) {
                    ""
                } else {
                    "  (not a covector zero set)"
                };
                text += &format!("  {}{mark}\n", fmt_set(f));
            }
            let v = json!({
                "flats": flats.iter().map(|&f| g.labels_of(f)).collect::<Vec<_>>(),
                "covector_zero_sets": zero_sets.iter().map(|&f| g.labels_of(f)).collect::<Vec<_>>(),
            });
            Ok((text, v, true))
        }
        Command::Repro { id } => {
            let reports = if id == "all" {
                run_all()?
            } else {
                vec![run_fixture(id)?]
            };
            let ok = reports.iter().all(Report::passed);
            let text: String = reports.iter().map(ToString::to_string).collect();
            let v = json!({ "passed": ok, "fixtures": reports.iter().map(report_json).collect::<Vec<_>>() });
            Ok((text, v, ok))
        }
        Command::Diagram { doc, svg, vectors } => {
            let m = read_doc(&doc.doc)?;
            let xs = match vectors {
                Some(list) => {
                    let rows: Vec<Vec<String>> =
                        serde_json::from_str(list).map_err(|e| Fail::Usage(format!("bad vector list: {e}")))?;
                    rows.iter().map(|r| m.vector(r)).collect::<Result<Vec<_>, _>>()?
                }
                None => m.cocircuits().to_vec(),
            };
            let d = PhaseDiagram::from_vectors(&xs)?;
            d.write_svg(svg)?;
            let text = format!("wrote {} circle(s) to {}\n", d.circles.len(), svg.display());
            Ok((
                text,
                json!({ "path": svg.display().to_string(), "circles": d.circles.len() }),
                true,
            ))
        }
    }
}

/// Circuits of a circuit document, without building the matroid.
fn read_reps(arg: &str) -> Result<Vec<FVector>, Fail> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Fail::Usage(format!("{arg}: {e}")))?
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| Fail::Usage(e.to_string()))?;
    if v.get("matrix").is_some() {
        return Ok(fmatroid_from_json(&text)?.circuits().to_vec());
    }
    let t: Tract = v["tract"]
        .as_str()
        .ok_or_else(|| Fail::Usage("missing tract".into()))?
        .parse()?;
    let rows: Vec<Vec<String>> =
        serde_json::from_value(v["circuits"].clone()).map_err(|e| Fail::Usage(format!("bad circuits: {e}")))?;
    let n = rows.first().map_or(0, Vec::len);
    let ground = match v.get("ground") {
        Some(g) => {
            GroundSet::new(serde_json::from_value::<Vec<String>>(g.clone()).map_err(|e| Fail::Usage(e.to_string()))?)?
        }
        None => GroundSet::numbered(n)?,
    };
    Ok(rows
        .iter()
        .map(|r| FVector::parse(t, ground.clone(), r))
        .collect::<Result<_, _>>()?)
}

fn tract_table(id: &str) -> Out {
    let t: Tract = id.parse()?;
    let elems = t
        .elements()
        .ok_or_else(|| Fail::Usage(format!("{t} is infinite; tables exist for finite tracts only")))?;
    let names: Vec<String> = elems.iter().map(ToString::to_string).collect();
    let w = names.iter().map(String::len).max().unwrap_or(1).max(3);
    let mut text = format!("{t}: multiplication\n{:>w$} |", "*");
    for n in &names {
        text += &format!(" {n:>w$}");
    }
    text.push('\n');
    let mut mul = Vec::new();
    for (a, na) in elems.iter().zip(&names) {
        text += &format!("{na:>w$} |");
        let mut row = Vec::new();
        for b in &elems {
            let p = a.mul(b).to_string();
            text += &format!(" {p:>w$}");
            row.push(p);
        }
        text.push('\n');
        mul.push(row);
    }
    text += &format!("{t}: sums\n");
    let mut sums = Vec::new();
    for (i, a) in elems.iter().enumerate() {
        let mut row = Vec::new();
        for b in &elems[i..] {
            let s = pair_sum(a, b)?;
            let set: Vec<String> = s.elements.iter().map(ToString::to_string).collect();
            text += &format!("  {a} ⊞ {b} = {{{}}}\n", set.join(", "));
            row.push(json!({ "a": a.to_string(), "b": b.to_string(), "sum": set }));
        }
        sums.extend(row);
    }
    Ok((
        text,
        json!({ "tract": t.to_string(), "elements": names, "mul": mul, "sums": sums }),
        true,
    ))
}
