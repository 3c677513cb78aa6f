use clap::{Parser, Subcommand};
use serde_json::json;
use sgs::census::census_with_caps;
use sgs::constructions::{
    base_bicyclic, block_construction, cartesian_product, complete_split, construction_one,
    corona_k1, extend, link, BaseBicyclicSpec, Certified, Matrix, RootedTree,
};
use sgs::error::{Result, SgsError};
use sgs::graph::{SignedGraph, VertexPermutation};
use sgs::poly::is_spectrally_symmetric;
use sgs::spectral::eigenvalues;
use sgs::symmetry::{classify, AUTOMORPHISM_CAP};
use sgs::verify::{verify_all, verify_suite, SuiteReport};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "sgs", version, about = "Spectral analysis of signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a signed graph: spectral symmetry, sign-symmetry,
    /// odd-exchangeability.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate and classify every switching class of the underlying graph.
    Census {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Cap on the cyclomatic number (2^k classes).
        #[arg(long, default_value_t = 16)]
        max_k: usize,
    },
    /// Generate a named construction; prints the graph in the text format.
    Construct {
        name: String,
        params: Vec<String>,
        /// Write the graph here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long)]
        json: bool,
    },
    /// Numeric eigenvalues, sorted descending.
    Spectrum {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        digits: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn sha256_hex(data: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(data);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn load_graph(path: &Path) -> Result<(SignedGraph, String)> {
    let text = std::fs::read_to_string(path)?;
    let g = SignedGraph::parse(&text)?;
    Ok((g, sha256_hex(text.as_bytes())))
}

fn wrap(command: &str, input_hash: &str, result: serde_json::Value) -> String {
    serde_json::to_string_pretty(&json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "input_hash": input_hash,
        "result": result,
    }))
    .unwrap()
}

fn opt_bool(v: Option<bool>) -> String {
    match v {
        Some(true) => "true".into(),
        Some(false) => "false".into(),
        None => "undecided".into(),
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Analyze { file, json } => {
            let (g, hash) = load_graph(&file)?;
            let verdict = classify(&g)?;
            if json {
                println!("{}", wrap("analyze", &hash, serde_json::to_value(&verdict).unwrap()));
            } else {
                println!("n: {}", g.n());
                println!("m: {}", g.m());
                println!("spectrally_symmetric: {}", verdict.spectrally_symmetric);
                println!("sign_symmetric: {}", opt_bool(verdict.sign_symmetric));
                println!("odd_exchangeable: {}", opt_bool(verdict.odd_exchangeable));
                match &verdict.witness {
                    Some(w) => println!("witness: {}", w.cycle_notation()),
                    None => println!("witness: none"),
                }
                match verdict.automorphism_count {
                    Some(c) => println!("automorphism_count: {c}"),
                    None => println!("automorphism_count: undecided"),
                }
            }
            Ok(0)
        }
        Command::Census { file, json, max_k } => {
            let (g, hash) = load_graph(&file)?;
            let report = census_with_caps(&g, max_k, AUTOMORPHISM_CAP)?;
            if json {
                println!("{}", wrap("census", &hash, serde_json::to_value(&report).unwrap()));
            } else {
                println!("n: {}  m: {}  k: {}", report.n, report.m, report.k);
                println!("classes: {}", report.summary.classes);
                println!("spectrally_symmetric: {}", report.summary.spectrally_symmetric);
                println!("sign_symmetric: {}", report.summary.sign_symmetric);
                println!(
                    "symmetric_not_sign_symmetric: {}",
                    report.summary.symmetric_not_sign_symmetric
                );
                println!("undecided: {}", report.summary.undecided);
                for class in &report.classes {
                    println!(
                        "class {:0width$b}  t={}  spectral={}  sign={}",
                        class.cotree_negatives,
                        class.t,
                        class.verdict.spectrally_symmetric,
                        opt_bool(class.verdict.sign_symmetric),
                        width = report.k.max(1),
                    );
                }
            }
            Ok(0)
        }
        Command::Construct { name, params, output, json } => {
            let hash = sha256_hex(format!("{name}\n{}", params.join("\n")).as_bytes());
            let (graph, witness) = build_construction(&name, &params)?;
            let text = graph.serialize();
            if let Some(path) = &output {
                std::fs::write(path, &text)?;
            }
            if json {
                println!(
                    "{}",
                    wrap(
                        "construct",
                        &hash,
                        json!({
                            "construction": name,
                            "parameters": params,
                            "witness_permutation": witness.as_ref().map(|w| w.image().to_vec()),
                            "graph": text,
                        })
                    )
                );
            } else if output.is_none() {
                print!("{text}");
            }
            Ok(0)
        }
        Command::Verify { suite, json } => {
            let hash = sha256_hex(suite.as_bytes());
            let reports: Vec<SuiteReport> = if suite == "all" {
                verify_all()?
            } else {
                vec![verify_suite(&suite)?]
            };
            let all_passed = reports.iter().all(|r| r.passed);
            if json {
                println!("{}", wrap("verify", &hash, serde_json::to_value(&reports).unwrap()));
            } else {
                for r in &reports {
                    if r.passed {
                        println!("{}: pass ({} cases)", r.suite, r.cases);
                    } else {
                        println!("{}: FAIL", r.suite);
                        if let Some(ce) = &r.counterexample {
                            println!("  counterexample: {ce}");
                        }
                    }
                }
            }
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Spectrum { file, digits, json } => {
            let (g, hash) = load_graph(&file)?;
            let spectrum = eigenvalues(&g);
            if json {
                println!(
                    "{}",
                    wrap(
                        "spectrum",
                        &hash,
                        json!({
                            "eigenvalues": spectrum.values,
                            "numerically_symmetric":
                                sgs::spectral::numeric_symmetry_check(&spectrum),
                            "spectrally_symmetric": is_spectrally_symmetric(&g),
                        })
                    )
                );
            } else {
                for v in &spectrum.values {
                    println!("{v:.digits$}");
                }
            }
            Ok(0)
        }
    }
}

fn parse_usize(tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| SgsError::Construction(format!("bad {what}: `{tok}`")))
}

fn parse_marks(tok: Option<&String>, parts: usize) -> Result<Vec<bool>> {
    match tok {
        None => Ok(vec![false; parts]),
        Some(s) => {
            if s.len() != parts || s.chars().any(|c| c != '0' && c != '1') {
                return Err(SgsError::Construction(format!(
                    "negative-mark spec must be {parts} characters of 0/1, got `{s}`"
                )));
            }
            Ok(s.chars().map(|c| c == '1').collect())
        }
    }
}

fn parse_permutation(tok: &str) -> Result<VertexPermutation> {
    let image: std::result::Result<Vec<usize>, _> =
        tok.split(',').map(|t| t.trim().parse()).collect();
    let image =
        image.map_err(|_| SgsError::Construction(format!("bad permutation `{tok}`")))?;
    VertexPermutation::new(image)
}

fn parse_signs(tok: &str) -> Result<Vec<i8>> {
    tok.chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            other => Err(SgsError::InvalidSign(other.to_string())),
        })
        .collect()
}

fn parse_tree(tok: &str) -> Result<RootedTree> {
    if tok == "empty" {
        return Ok(RootedTree::empty());
    }
    if tok == "k1" {
        return RootedTree::new(SignedGraph::new(1, &[])?, 0);
    }
    if let Some(rest) = tok.strip_prefix('p') {
        let n = parse_usize(rest, "path length")?;
        if n < 1 {
            return Err(SgsError::Construction("path needs at least one vertex".into()));
        }
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        return RootedTree::new(SignedGraph::all_positive(n, &edges)?, 0);
    }
    if let Some(rest) = tok.strip_prefix("star") {
        let n = parse_usize(rest, "star size")?;
        if n < 1 {
            return Err(SgsError::Construction("star needs at least one vertex".into()));
        }
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
        return RootedTree::new(SignedGraph::all_positive(n, &edges)?, 0);
    }
    Err(SgsError::Construction(format!(
        "unknown tree spec `{tok}` (use empty, k1, pN, starN)"
    )))
}

fn parse_matrix(tok: &str) -> Result<Matrix> {
    serde_json::from_str(tok)
        .map_err(|e| SgsError::Construction(format!("bad matrix JSON: {e}")))
}

fn build_construction(
    name: &str,
    params: &[String],
) -> Result<(SignedGraph, Option<VertexPermutation>)> {
    let need = |count: usize| -> Result<()> {
        if params.len() < count {
            Err(SgsError::Construction(format!(
                "`{name}` needs at least {count} parameter(s), got {}",
                params.len()
            )))
        } else {
            Ok(())
        }
    };
    match name {
        // the worked extension: ∞(u;3⁻,3) with the triangle swap, plus the
        // edge pair {1,3}, {2,4}
        "extend-infinity-33" => {
            let base = base_bicyclic(&BaseBicyclicSpec::Infinity {
                lengths: [3, 3],
                neg_marks: [true, false],
            })?;
            let phi = VertexPermutation::new(vec![0, 4, 3, 2, 1])?;
            let Certified { graph, witness } = extend(&base, &phi, 1, 3, 1)?;
            Ok((graph, Some(witness)))
        }
        "theta" => {
            need(3)?;
            let lengths = [
                parse_usize(&params[0], "length")?,
                parse_usize(&params[1], "length")?,
                parse_usize(&params[2], "length")?,
            ];
            let marks = parse_marks(params.get(3), 3)?;
            let g = base_bicyclic(&BaseBicyclicSpec::Theta {
                lengths,
                neg_marks: [marks[0], marks[1], marks[2]],
            })?;
            Ok((g, None))
        }
        "infinity" => {
            need(2)?;
            let lengths = [
                parse_usize(&params[0], "length")?,
                parse_usize(&params[1], "length")?,
            ];
            let marks = parse_marks(params.get(2), 2)?;
            let g = base_bicyclic(&BaseBicyclicSpec::Infinity {
                lengths,
                neg_marks: [marks[0], marks[1]],
            })?;
            Ok((g, None))
        }
        "bowtie" => {
            need(3)?;
            let path = parse_usize(&params[0], "path length")?;
            let lengths = [
                parse_usize(&params[1], "length")?,
                parse_usize(&params[2], "length")?,
            ];
            let marks = parse_marks(params.get(3), 3)?;
            let g = base_bicyclic(&BaseBicyclicSpec::Bowtie {
                path,
                lengths,
                neg_marks: [marks[0], marks[1], marks[2]],
            })?;
            Ok((g, None))
        }
        "complete-split" => {
            need(1)?;
            let (half, _) = load_graph(Path::new(&params[0]))?;
            Ok((complete_split(&half), None))
        }
        "block" => {
            need(2)?;
            let b = parse_matrix(&params[0])?;
            let c = parse_matrix(&params[1])?;
            Ok((block_construction(&b, &c)?, None))
        }
        "cartesian" => {
            need(2)?;
            let (a, _) = load_graph(Path::new(&params[0]))?;
            let (b, _) = load_graph(Path::new(&params[1]))?;
            Ok((cartesian_product(&a, &b), None))
        }
        "corona" => {
            need(1)?;
            let (g, _) = load_graph(Path::new(&params[0]))?;
            Ok((corona_k1(&g), None))
        }
        "link" => {
            need(3)?;
            let (g, _) = load_graph(Path::new(&params[0]))?;
            let u = parse_usize(&params[1], "vertex")?;
            let signs = parse_signs(&params[2])?;
            let Certified { graph, witness } = link(&g, u, &signs)?;
            Ok((graph, Some(witness)))
        }
        "extend" => {
            need(4)?;
            let (g, _) = load_graph(Path::new(&params[0]))?;
            let phi = parse_permutation(&params[1])?;
            let vi = parse_usize(&params[2], "vertex")?;
            let vj = parse_usize(&params[3], "vertex")?;
            let sign = match params.get(4).map(String::as_str) {
                None | Some("+") => 1,
                Some("-") => -1,
                Some(other) => return Err(SgsError::InvalidSign(other.to_string())),
            };
            let Certified { graph, witness } = extend(&g, &phi, vi, vj, sign)?;
            Ok((graph, Some(witness)))
        }
        "construction-one" => {
            // default: triangles with trees K₁, P₂, K₁
            if params.is_empty() {
                let trees = vec![parse_tree("k1")?, parse_tree("p2")?, parse_tree("k1")?];
                return Ok((construction_one(3, &trees)?, None));
            }
            let odd_len = parse_usize(&params[0], "cycle length")?;
            let trees: Result<Vec<RootedTree>> =
                params[1..].iter().map(|t| parse_tree(t)).collect();
            Ok((construction_one(odd_len, &trees?)?, None))
        }
        other => Err(SgsError::Construction(format!(
            "unknown construction `{other}`; known: extend-infinity-33, theta, infinity, \
             bowtie, complete-split, block, cartesian, corona, link, extend, construction-one"
        ))),
    }
}
