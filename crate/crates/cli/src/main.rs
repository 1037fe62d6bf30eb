//! Command-line front end. Exit codes are part of the contract:
//! 0 = property holds / success, 1 = property fails, 2 = bad input or I/O
//! trouble, 3 = undecided at the configured brute-force limits.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use monotonaut::{
    add_sink, decide_monotonic, decide_oriented, find_nontrivial_partial_order, nae_bruteforce,
    reduce_nae_to_automaton, reduce_to_binary, verify_cyclic_order, verify_linear_order,
    Automaton, BinaryLayout, CyclicOrder, GadgetLayout, LinearOrder, NaeInstance,
    OrientedVerdict, DEFAULT_CYCLIC_LIMIT,
};

#[derive(Parser)]
#[command(
    name = "monotonaut",
    version,
    about = "Decide whether finite automata preserve linear, cyclic or partial orders",
    after_help = "Exit codes: 0 property holds / success, 1 property fails, \
                  2 malformed input or I/O error, 3 undecided at the configured limits."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a property of an automaton and print a witness if one exists
    #[command(subcommand)]
    Check(CheckCommand),
    /// Check a proposed order against an automaton
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Build one of the gadget constructions and write it as .aut
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Solve auxiliary problems
    #[command(subcommand)]
    Solve(SolveCommand),
    /// Generate automata
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Is there a linear order preserved by every letter?
    Monotonic {
        /// Automaton in .aut format
        file: PathBuf,
        /// State cap for brute-force fallbacks; the monotonic decision itself
        /// is exact at any size and ignores this
        #[arg(long, default_value_t = DEFAULT_CYCLIC_LIMIT)]
        limit: usize,
    },
    /// Is there a cyclic order preserved by every letter?
    Oriented {
        /// Automaton in .aut format
        file: PathBuf,
        /// State cap for the cyclic brute-force fallback on non-monotonic
        /// automata; beyond it the answer is "undecided"
        #[arg(long, default_value_t = DEFAULT_CYCLIC_LIMIT)]
        limit: usize,
    },
    /// Is some nontrivial partial order preserved?
    PartialOrder {
        /// Automaton in .aut format
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Verify a linear order (states listed least to greatest)
    Linear {
        /// Automaton in .aut format
        file: PathBuf,
        /// Space-separated state indices
        #[arg(long)]
        order: String,
    },
    /// Verify a cyclic order (any rotation)
    Cyclic {
        /// Automaton in .aut format
        file: PathBuf,
        /// Space-separated state indices
        #[arg(long)]
        order: String,
    },
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Clause-gadget automaton of a MONOTONE-NAE-3SAT instance (.nae input)
    Nae3sat {
        file: PathBuf,
        /// Output .aut path; a sidecar .map file names the gadget states
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Binary-alphabet simulation of an automaton with at least 3 letters
    Binary {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Add a fresh sink state fixed by every letter
    AddSink {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum SolveCommand {
    /// Find a not-all-equal satisfying assignment by exhaustive search
    Nae { file: PathBuf },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Uniformly random transition table from a fixed seed
    Random {
        #[arg(long)]
        states: usize,
        #[arg(long)]
        letters: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

const EXIT_HOLDS: u8 = 0;
const EXIT_FAILS: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Check(cmd) => check(cmd),
        Command::Verify(cmd) => verify(cmd),
        Command::Reduce(cmd) => reduce(cmd),
        Command::Solve(cmd) => solve(cmd),
        Command::Gen(cmd) => generate(cmd),
    }
}

fn read_automaton(path: &Path) -> Result<Automaton, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Automaton::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_instance(path: &Path) -> Result<NaeInstance, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    NaeInstance::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, contents: impl Display) -> Result<(), String> {
    fs::write(path, contents.to_string()).map_err(|e| format!("{}: {e}", path.display()))
}

fn check(cmd: CheckCommand) -> Result<u8, String> {
    match cmd {
        CheckCommand::Monotonic { file, limit: _ } => {
            let a = read_automaton(&file)?;
            match decide_monotonic(&a).certificate() {
                Some(order) => {
                    println!("yes");
                    println!("{order}");
                    Ok(EXIT_HOLDS)
                }
                None => {
                    println!("no");
                    Ok(EXIT_FAILS)
                }
            }
        }
        CheckCommand::Oriented { file, limit } => {
            let a = read_automaton(&file)?;
            match decide_oriented(&a, limit) {
                OrientedVerdict::Yes(cycle) => {
                    println!("yes");
                    println!("{}", cycle.canonical());
                    Ok(EXIT_HOLDS)
                }
                OrientedVerdict::No => {
                    println!("no");
                    Ok(EXIT_FAILS)
                }
                OrientedVerdict::Undecided => {
                    println!("undecided");
                    Ok(EXIT_UNDECIDED)
                }
            }
        }
        CheckCommand::PartialOrder { file } => {
            let a = read_automaton(&file)?;
            match find_nontrivial_partial_order(&a).certificate() {
                Some(rel) => {
                    println!("yes");
                    let edges: Vec<String> =
                        rel.edges().iter().map(|(p, q)| format!("{p}<{q}")).collect();
                    println!("{}", edges.join(" "));
                    Ok(EXIT_HOLDS)
                }
                None => {
                    println!("no");
                    Ok(EXIT_FAILS)
                }
            }
        }
    }
}

fn verify(cmd: VerifyCommand) -> Result<u8, String> {
    let preserved = match cmd {
        VerifyCommand::Linear { file, order } => {
            let a = read_automaton(&file)?;
            let ord = LinearOrder::parse(&order).map_err(|e| e.to_string())?;
            verify_linear_order(&a, &ord).map_err(|e| e.to_string())?
        }
        VerifyCommand::Cyclic { file, order } => {
            let a = read_automaton(&file)?;
            let ord = CyclicOrder::parse(&order).map_err(|e| e.to_string())?;
            verify_cyclic_order(&a, &ord).map_err(|e| e.to_string())?
        }
    };
    if preserved {
        println!("yes");
        Ok(EXIT_HOLDS)
    } else {
        println!("no");
        Ok(EXIT_FAILS)
    }
}

fn map_path(output: &Path) -> PathBuf {
    output.with_extension("map")
}

fn reduce(cmd: ReduceCommand) -> Result<u8, String> {
    match cmd {
        ReduceCommand::Nae3sat { file, output } => {
            let inst = read_instance(&file)?;
            let a = reduce_nae_to_automaton(&inst);
            write_file(&output, &a)?;
            let layout = GadgetLayout::for_instance(&inst);
            let mut map = String::from("# states\n");
            for state in 0..a.n_states() {
                map.push_str(&format!("{state} {}\n", layout.state_name(state)));
            }
            map.push_str("# letters\n");
            for letter in 0..a.n_letters() {
                map.push_str(&format!("{letter} {}\n", layout.letter_name(letter)));
            }
            write_file(&map_path(&output), map)?;
            Ok(EXIT_HOLDS)
        }
        ReduceCommand::Binary { file, output } => {
            let a = read_automaton(&file)?;
            let layout = BinaryLayout::for_automaton(&a);
            let b = reduce_to_binary(&a).map_err(|e| e.to_string())?;
            write_file(&output, &b)?;
            let mut map = String::from("# states\n");
            for state in 0..b.n_states() {
                map.push_str(&format!("{state} {}\n", layout.state_name(state)));
            }
            map.push_str("# letters\n0 a\n1 b\n");
            write_file(&map_path(&output), map)?;
            Ok(EXIT_HOLDS)
        }
        ReduceCommand::AddSink { file, output } => {
            let a = read_automaton(&file)?;
            let b = add_sink(&a);
            write_file(&output, &b)?;
            let mut map = String::from("# states\n");
            for state in 0..a.n_states() {
                map.push_str(&format!("{state} q_{state}\n"));
            }
            map.push_str(&format!("{} s\n", a.n_states()));
            write_file(&map_path(&output), map)?;
            Ok(EXIT_HOLDS)
        }
    }
}

fn solve(cmd: SolveCommand) -> Result<u8, String> {
    match cmd {
        SolveCommand::Nae { file } => {
            let inst = read_instance(&file)?;
            match nae_bruteforce(&inst).map_err(|e| e.to_string())? {
                Some(assignment) => {
                    println!("{assignment}");
                    Ok(EXIT_HOLDS)
                }
                None => {
                    println!("unsat");
                    Ok(EXIT_FAILS)
                }
            }
        }
    }
}

fn generate(cmd: GenCommand) -> Result<u8, String> {
    match cmd {
        GenCommand::Random { states, letters, seed, output } => {
            if states == 0 || letters == 0 {
                return Err("--states and --letters must be positive".into());
            }
            let a = Automaton::random(states, letters, seed);
            match output {
                Some(path) => write_file(&path, &a)?,
                None => print!("{a}"),
            }
            Ok(EXIT_HOLDS)
        }
    }
}
