//! Command-line front end: every subcommand parses, calls the library, and
//! formats; no algorithmic logic lives here.

mod render;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use render::{render_patch, render_polyomino, RenderSpec};
use tileforge::bn::{as_double_square, find_hexagon_factorizations, find_square_factorizations};
use tileforge::catalog::{enumerate_bruteforce, enumerate_parametric, verify_conjecture, DedupMode};
use tileforge::morphism::{find_preimages, is_prime};
use tileforge::polyomino::BoundaryWord;
use tileforge::word::Word;

#[derive(Parser)]
#[command(name = "tileforge", version, about = "Boundary-word algebra of double square tiles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A word given either directly or as a file of words, one per line.
#[derive(Args)]
struct WordInput {
    /// Boundary word over the letters 0 (east), 1 (north), 2 (west), 3 (south)
    #[arg(
        value_name = "WORD",
        required_unless_present = "from_file",
        conflicts_with = "from_file"
    )]
    word: Option<String>,
    /// Read words from a file, one per line
    #[arg(long, value_name = "FILE")]
    from_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a word traces a closed, non-crossing boundary
    Validate(WordInput),
    /// List the square (or hexagon) boundary factorizations
    Factorize {
        #[command(flatten)]
        input: WordInput,
        /// List hexagon factorizations instead of square ones
        #[arg(long)]
        hexagon: bool,
    },
    /// Show the eight-arc structure and form classification of a double square
    DoubleSquare(WordInput),
    /// Test primality of a double square
    Prime(WordInput),
    /// Enumerate all double squares up to a perimeter bound
    Enumerate {
        #[arg(long)]
        max_perimeter: usize,
        /// Keep only prime entries
        #[arg(long)]
        prime_only: bool,
        /// Generate from the seven form templates instead of brute force
        #[arg(long)]
        parametric: bool,
        /// Identification of entries: rotation or dihedral
        #[arg(long, default_value = "rotation", value_parser = parse_dedup, conflicts_with = "parametric")]
        dedup: DedupMode,
        /// Write the catalog to a file instead of standard output
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check that every prime double square up to the bound is couple-free
    VerifyConjecture {
        #[arg(long)]
        max_perimeter: usize,
    },
    /// Render a polyomino to SVG
    Render {
        word: String,
        #[arg(short, long, value_name = "FILE")]
        output: PathBuf,
        /// Mark factorization cut vertices with colored dots
        #[arg(long)]
        cuts: bool,
    },
    /// Render a rows × cols tiling patch to SVG
    Tile {
        word: String,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(short, long, value_name = "FILE")]
        output: PathBuf,
    },
}

fn parse_dedup(s: &str) -> Result<DedupMode, String> {
    DedupMode::parse(s).ok_or_else(|| format!("expected 'rotation' or 'dihedral', got {s:?}"))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Validate(input) => for_each_word(&input, |p| {
            Ok(format!("valid, perimeter={}, area={}\n", p.perimeter(), p.area()))
        }),
        Command::Factorize { input, hexagon } => {
            for_each_word(&input, |p| Ok(factorize_text(p, hexagon)))
        }
        Command::DoubleSquare(input) => for_each_word(&input, double_square_text),
        Command::Prime(input) => for_each_word(&input, prime_text),
        Command::Enumerate { max_perimeter, prime_only, parametric, dedup, output } => {
            let mut catalog = if parametric {
                enumerate_parametric(max_perimeter)
            } else {
                enumerate_bruteforce(max_perimeter, dedup)
            }
            .map_err(|e| e.to_string())?;
            if prime_only {
                catalog.entries.retain(|e| e.prime);
            }
            emit(output.as_deref(), &catalog.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyConjecture { max_perimeter } => {
            let report = verify_conjecture(max_perimeter).map_err(|e| e.to_string())?;
            print!("{}", conjecture_text(&report));
            Ok(if report.holds() { ExitCode::SUCCESS } else { ExitCode::from(3) })
        }
        Command::Render { word, output, cuts } => {
            let p = parse_boundary(&word)?;
            let factorizations = if cuts { find_square_factorizations(&p) } else { Vec::new() };
            let spec = RenderSpec { annotate_cuts: cuts, ..RenderSpec::default() };
            emit(Some(&output), &render_polyomino(&p, &factorizations, &spec))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Tile { word, rows, cols, output } => {
            let p = parse_boundary(&word)?;
            let factorizations = find_square_factorizations(&p);
            let f = factorizations
                .first()
                .ok_or_else(|| format!("{word} has no square factorization"))?;
            let svg = render_patch(&p, f, rows, cols, &RenderSpec::default())
                .map_err(|e| e.to_string())?;
            emit(Some(&output), &svg)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_boundary(word: &str) -> Result<BoundaryWord, String> {
    let word: Word = word.parse().map_err(|e| format!("{e}"))?;
    BoundaryWord::validate(&word).map_err(|e| format!("{e}"))
}

/// Runs a formatter on the single word or on each line of the words file.
fn for_each_word(
    input: &WordInput,
    format: impl Fn(&BoundaryWord) -> Result<String, String>,
) -> Result<ExitCode, String> {
    if let Some(word) = &input.word {
        print!("{}", format(&parse_boundary(word)?)?);
        return Ok(ExitCode::SUCCESS);
    }
    let path = input.from_file.as_ref().expect("clap enforces one source");
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut out = String::new();
    for word in text.lines().filter(|l| !l.is_empty()) {
        let block = format(&parse_boundary(word)?).map_err(|e| format!("{word}: {e}"))?;
        let _ = writeln!(out, "# {word}");
        out.push_str(&block);
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn factorize_text(p: &BoundaryWord, hexagon: bool) -> String {
    let mut out = String::new();
    if hexagon {
        for f in find_hexagon_factorizations(p) {
            let cuts = f.cuts().map(|c| c.to_string()).join(",");
            let [x1, x2, x3] = f.factors();
            let _ = writeln!(out, "hexagon\tcuts={cuts}\tX1={x1}\tX2={x2}\tX3={x3}");
        }
    } else {
        for f in find_square_factorizations(p) {
            let cuts = f.cuts().map(|c| c.to_string()).join(",");
            let _ = writeln!(out, "square\tcuts={cuts}\tA={}\tB={}", f.factor_a(), f.factor_b());
        }
    }
    if out.is_empty() {
        out.push_str("none\n");
    }
    out
}

fn double_square_text(p: &BoundaryWord) -> Result<String, String> {
    let Some(s) = as_double_square(p).map_err(|e| e.to_string())? else {
        return Ok(format!(
            "not a double square ({} square factorization(s))\n",
            find_square_factorizations(p).len()
        ));
    };
    let mut out = String::new();
    let _ = writeln!(out, "double square\tword={}", p.word());
    for (label, words) in [("w", s.w().as_slice()), ("u", s.u().as_slice())] {
        let row = (1..=8)
            .map(|i| format!("{label}{i}={}", words[i - 1]))
            .collect::<Vec<_>>()
            .join("\t");
        let _ = writeln!(out, "{row}");
    }
    let row = (1..=8).map(|i| format!("n{i}={}", s.n()[i - 1])).collect::<Vec<_>>().join("\t");
    let _ = writeln!(out, "{row}");
    match s.classification() {
        Some(c) => {
            let [n1, n2, n3, n4] = c.params.exponents;
            let _ = writeln!(
                out,
                "form={}\tu1={}\tu3={}\tk={}\tp={}\texponents={n1},{n2},{n3},{n4}",
                c.tag, c.params.u1, c.params.u3, c.params.k, c.params.p
            );
        }
        None => {
            let _ = writeln!(out, "form=unclassified");
        }
    }
    Ok(out)
}

fn prime_text(p: &BoundaryWord) -> Result<String, String> {
    if is_prime(p).map_err(|e| e.to_string())? {
        return Ok("prime double square\n".into());
    }
    let mut out = String::from("not prime\n");
    if let Some(pre) = find_preimages(p, 5, p.perimeter() - 1).first() {
        let _ = writeln!(
            out,
            "reduces via 0->{} 1->{} from {}",
            pre.morphism.img0(),
            pre.morphism.img1(),
            pre.source
        );
    }
    Ok(out)
}

fn conjecture_text(report: &tileforge::catalog::ConjectureReport) -> String {
    let mut out = String::from("#perimeter\tdouble_squares\tprime\tprime_couple_free\n");
    for row in &report.rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}",
            row.perimeter, row.double_squares, row.prime, row.prime_couple_free
        );
    }
    for word in &report.counterexamples {
        let _ = writeln!(out, "counterexample\t{word}");
    }
    out
}
