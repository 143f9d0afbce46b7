use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use stabcover::arrangement::{
    build_coxeter_arrangement_with_ceiling, cd4_arrangement, rank2_arrangement, restrict_to_flat, Arrangement,
    CoxeterType, DEFAULT_RANK_CEILING,
};
use stabcover::cover::{ComplexPoint, Cover, DEFAULT_REFINEMENT_DEPTH};
use stabcover::graph::SkeletonGraph;
use stabcover::groupoid::Groupoid;
use stabcover::io::{from_json, parse_path, parse_word, to_json, PresentationFile, StabilityFile, WordFile};
use stabcover::ktheory::KTheory;
use stabcover::verify::{verify, Config, Suite};
use stabcover::{Error, Result};

/// Exact chamber, groupoid, K-theory and stability-cover computations for
/// simplicial arrangements. All machine output is JSON on stdout.
///
/// Exit codes: 0 success, 1 invalid input, 2 a verified property failed.
/// Every flag with an env name can also be set through the STABCOVER_
/// variable shown.
#[derive(Parser)]
#[command(name = "stabcover", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ArrInput {
    /// Arrangement JSON file, or `-` for stdin (the default).
    #[arg(long, short = 'a', env = "STABCOVER_ARR", default_value = "-")]
    arr: String,
}

impl ArrInput {
    fn load(&self) -> Result<Arrangement> {
        let text = if self.arr == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::validation(format!("arr: cannot read stdin: {e}")))?;
            s
        } else {
            fs::read_to_string(&self.arr).map_err(|e| Error::validation(format!("arr: cannot read {}: {e}", self.arr)))?
        };
        from_json(&text).map_err(|e| prefix("arr", e))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit an arrangement as JSON.
    Gen {
        /// Coxeter arrangement, e.g. `A3` or `D4`.
        #[arg(long, conflicts_with = "rank2")]
        coxeter: Option<String>,
        /// Rank-2 arrangement with m lines (default 4).
        #[arg(long, num_args = 0..=1, default_missing_value = "4")]
        rank2: Option<usize>,
        /// The two-curve cD4 example: normals (1,0), (0,1), (1,1), (1,2).
        #[arg(long = "paper-cd4")]
        cd4: bool,
        /// Restrict the Coxeter arrangement to the flat cut out by these
        /// hyperplane indices (comma separated).
        #[arg(long, value_delimiter = ',', requires = "coxeter")]
        restrict: Vec<usize>,
        #[arg(long, env = "STABCOVER_MAX_RANK", default_value_t = DEFAULT_RANK_CEILING)]
        max_rank: usize,
    },
    /// List chambers with sign vectors and ray frames.
    Chambers(ArrInput),
    /// Arrows of the labelled skeleton graph.
    Graph {
        #[command(flatten)]
        input: ArrInput,
        /// Emit Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// All minimal galleries from chamber A to chamber B.
    Galleries {
        #[command(flatten)]
        input: ArrInput,
        a: usize,
        b: usize,
    },
    /// Decide equality of two groupoid words, written like `3 17^-1 5`.
    WordEq {
        #[command(flatten)]
        input: ArrInput,
        u: String,
        v: String,
        /// Source chamber, needed for empty words.
        #[arg(long)]
        from: Option<usize>,
        #[arg(long, env = "STABCOVER_BUDGET", default_value_t = 20_000)]
        budget: usize,
    },
    /// K-matrix of a positive path of arrow ids.
    Kmatrix {
        #[command(flatten)]
        input: ArrInput,
        #[arg(default_value = "")]
        path: String,
        /// Source chamber of an empty path (default 0).
        #[arg(long)]
        from: Option<usize>,
    },
    /// The piece containing a point of the complexified complement.
    Locate {
        #[command(flatten)]
        input: ArrInput,
        /// Complex point JSON, inline or a file name.
        z: String,
    },
    /// Project a stability point to the complement.
    Project {
        #[command(flatten)]
        input: ArrInput,
        /// Stability point JSON, inline or a file name.
        point: String,
    },
    /// Apply a deck transformation given by a loop at the base chamber.
    Deck {
        #[command(flatten)]
        input: ArrInput,
        point: String,
        /// Loop word at chamber 0, e.g. `0 4`.
        #[arg(long = "loop")]
        word: String,
    },
    /// Lift a closed polyline and report its word and K-matrix.
    Monodromy {
        #[command(flatten)]
        input: ArrInput,
        /// Polyline JSON (array of complex points), inline or a file name.
        polyline: String,
        /// Chamber whose piece contains the start point (located if omitted).
        #[arg(long)]
        base: Option<usize>,
        #[arg(long, env = "STABCOVER_DEPTH", default_value_t = DEFAULT_REFINEMENT_DEPTH)]
        depth: usize,
    },
    /// Vertex-group presentation at the base chamber.
    Presentation(ArrInput),
    /// Run a seeded property suite and emit a report.
    Verify {
        #[command(flatten)]
        input: ArrInput,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, env = "STABCOVER_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "STABCOVER_SAMPLES", default_value_t = 100)]
        samples: usize,
        #[arg(long, env = "STABCOVER_BUDGET", default_value_t = 20_000)]
        budget: usize,
        #[arg(long, env = "STABCOVER_MAX_RANK", default_value_t = DEFAULT_RANK_CEILING)]
        max_rank: usize,
        #[arg(long, env = "STABCOVER_DEPTH", default_value_t = DEFAULT_REFINEMENT_DEPTH)]
        depth: usize,
        /// Include wall-clock time (reports are then no longer reproducible).
        #[arg(long)]
        timing: bool,
    },
}

enum Output {
    Json(String),
    Text(String),
    Failed(String),
}

fn json_out<T: Serialize>(v: &T) -> Result<Output> {
    Ok(Output::Json(to_json(v)))
}

/// Inline JSON, or the contents of a file.
fn json_arg(field: &str, arg: &str) -> Result<String> {
    let t = arg.trim_start();
    if t.starts_with('[') || t.starts_with('{') {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg).map_err(|e| Error::validation(format!("{field}: cannot read {arg}: {e}")))
    }
}

fn parse_arg<T: serde::de::DeserializeOwned>(field: &str, arg: &str) -> Result<T> {
    from_json(&json_arg(field, arg)?).map_err(|e| prefix(field, e))
}

fn gen(coxeter: Option<String>, rank2: Option<usize>, cd4: bool, restrict: Vec<usize>, max_rank: usize) -> Result<Arrangement> {
    if cd4 {
        if rank2.is_some_and(|m| m != 4) || coxeter.is_some() {
            return Err(Error::validation("paper-cd4: conflicts with the other generator options"));
        }
        return Ok(cd4_arrangement());
    }
    if let Some(m) = rank2 {
        return rank2_arrangement(m);
    }
    let Some(name) = coxeter else {
        return Err(Error::validation("gen: give one of --coxeter, --rank2 or --paper-cd4"));
    };
    if name.len() < 2 || !name.is_char_boundary(1) {
        return Err(Error::validation(format!("coxeter: expected a type and rank like A3, got {name:?}")));
    }
    let (ty, rank) = name.split_at(1);
    let ty: CoxeterType = ty.parse()?;
    let rank = rank
        .parse()
        .map_err(|_| Error::validation(format!("coxeter: bad rank in {name:?}")))?;
    let arr = build_coxeter_arrangement_with_ceiling(ty, rank, max_rank)?;
    if restrict.is_empty() {
        Ok(arr)
    } else {
        restrict_to_flat(&arr, &restrict)
    }
}

fn run(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Gen { coxeter, rank2, cd4, restrict, max_rank } => {
            json_out(&gen(coxeter, rank2, cd4, restrict, max_rank)?)
        }
        Command::Chambers(input) => {
            let g = SkeletonGraph::build(&input.load()?)?;
            json_out(&g.chambers())
        }
        Command::Graph { input, dot } => {
            let g = SkeletonGraph::build(&input.load()?)?;
            if dot {
                return Ok(Output::Text(g.to_dot()));
            }
            json_out(&json!({
                "arrangement": g.arrangement().descriptor(),
                "chambers": g.num_chambers(),
                "arrows": g.arrows(),
            }))
        }
        Command::Galleries { input, a, b } => {
            let g = SkeletonGraph::build(&input.load()?)?;
            for (name, c) in [("a", a), ("b", b)] {
                if c >= g.num_chambers() {
                    return Err(Error::validation(format!("{name}: chamber {c} does not exist")));
                }
            }
            let all = g.minimal_galleries(a, b);
            let galleries: Vec<&[usize]> = all.iter().map(|p| p.arrows()).collect();
            json_out(&json!({
                "source": a,
                "target": b,
                "length": g.distance(a, b),
                "galleries": galleries,
            }))
        }
        Command::WordEq { input, u, v, from, budget } => {
            let g = SkeletonGraph::build(&input.load()?)?;
            let gr = Groupoid::new(&g)?;
            let u = parse_word(&g, &u, from).map_err(|e| prefix("u", e))?;
            let v = parse_word(&g, &v, from).map_err(|e| prefix("v", e))?;
            let verdict = gr.groupoid_word_equal(&u, &v, budget)?;
            json_out(&json!({ "verdict": verdict, "budget": budget }))
        }
        Command::Kmatrix { input, path, from } => {
            let g = SkeletonGraph::build(&input.load()?)?;
            let kt = KTheory::new(&g)?;
            let from = from.or(path.trim().is_empty().then_some(0));
            let p = parse_path(&g, &path, from).map_err(|e| prefix("path", e))?;
            json_out(&kt.f_along_path(&p))
        }
        Command::Locate { input, z } => {
            let g = SkeletonGraph::build(&input.load()?)?;
            let cov = Cover::new(&g)?;
            let z: ComplexPoint = parse_arg("z", &z)?;
            check_len("z", z.len(), g.rank())?;
            json_out(&json!({ "chamber": cov.locate(&z)? }))
        }
        Command::Project { input, point } => {
            let g = SkeletonGraph::build(&input.load()?)?;
            let cov = Cover::new(&g)?;
            let s = parse_arg::<StabilityFile>("point", &point)?.into_point(&g)?;
            json_out(&json!({ "chamber": s.chamber(), "projection": cov.project_p(&s) }))
        }
        Command::Deck { input, point, word } => {
            let g = SkeletonGraph::build(&input.load()?)?;
            let cov = Cover::new(&g)?;
            let s = parse_arg::<StabilityFile>("point", &point)?.into_point(&g)?;
            let beta = parse_word(&g, &word, Some(0)).map_err(|e| prefix("loop", e))?;
            json_out(&StabilityFile::from(&cov.deck_act(&beta, &s)?))
        }
        Command::Monodromy { input, polyline, base, depth } => {
            let g = SkeletonGraph::build(&input.load()?)?;
            let cov = Cover::new(&g)?;
            let lp: Vec<ComplexPoint> = parse_arg("polyline", &polyline)?;
            for (k, z) in lp.iter().enumerate() {
                check_len(&format!("polyline[{k}]"), z.len(), g.rank())?;
            }
            let base = match (base, lp.first()) {
                (Some(b), _) => b,
                (None, Some(z)) => cov.locate(z)?,
                (None, None) => return Err(Error::validation("polyline: empty")),
            };
            let m = cov.monodromy(&lp, base, depth)?;
            json_out(&json!({
                "word": WordFile::from(&m.word),
                "text": m.word.to_string(),
                "kmatrix": m.kmatrix,
                "convention": "a wall coordinate leaving the upper half-plane through the positive reals records the arrow forwards; through the negative reals, the opposite arrow backwards",
            }))
        }
        Command::Presentation(input) => {
            let g = SkeletonGraph::build(&input.load()?)?;
            let p = Groupoid::new(&g)?.vertex_presentation();
            let file = PresentationFile::from(&p);
            json_out(&json!({
                "generators": file.generators,
                "relations": file.relations,
                "abelianization": p.abelianization(),
            }))
        }
        Command::Verify { input, suite, seed, samples, budget, max_rank, depth, timing } => {
            let suite: Suite = suite.parse()?;
            let cfg = Config { rank_ceiling: max_rank, samples, budget, refinement_depth: depth, seed, timing };
            cfg.validate()?;
            let report = verify(&input.load()?, suite, &cfg)?;
            let text = to_json(&report);
            Ok(if report.passed() { Output::Json(text) } else { Output::Failed(text) })
        }
    }
}

fn prefix(field: &str, e: Error) -> Error {
    match e {
        Error::Validation(m) => Error::Validation(format!("{field}: {m}")),
        Error::Parse(m) => Error::Parse(format!("{field}: {m}")),
        other => other,
    }
}

fn check_len(field: &str, got: usize, rank: usize) -> Result<()> {
    if got == rank {
        Ok(())
    } else {
        Err(Error::validation(format!("{field}: expected {rank} coordinates, got {got}")))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.render().to_string();
            println!("{}", to_json(&json!({ "error": "input", "message": msg.trim() })));
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(Output::Json(s)) | Ok(Output::Text(s)) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Output::Failed(s)) => {
            println!("{s}");
            ExitCode::from(2)
        }
        Err(e) => {
            let code = if e.is_falsification() { 2 } else { 1 };
            let kind = if code == 2 { "falsification" } else { "input" };
            println!("{}", to_json(&json!({ "error": kind, "message": e.to_string() })));
            ExitCode::from(code)
        }
    }
}
