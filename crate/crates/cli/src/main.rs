use std::io::{self, BufWriter, Write};
use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mhrg_cli::api::{serve, AppState};
use mhrg_cli::commands::{self, CliResult, Format, Suite};
use mhrg_core::{Board, Partition, DEFAULT_MAX_POSITIONS};

#[derive(Parser)]
#[command(name = "mhrg", version, about = "Multiple Hook Removing Game on Young diagrams")]
struct Cli {
    /// Largest number of partitions C(m+n, m) a board may have
    #[arg(long, global = true, env = "MHRG_MAX_POSITIONS", default_value_t = DEFAULT_MAX_POSITIONS)]
    max_positions: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BoardArgs {
    /// number of rows
    #[arg(long)]
    m: usize,
    /// number of columns
    #[arg(long)]
    n: usize,
}

impl BoardArgs {
    fn board(&self) -> CliResult<Board> {
        Ok(Board::new(self.m, self.n)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List every diagram of the board with its game data
    Enumerate {
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// only diagrams reachable from the full rectangle
        #[arg(long)]
        members_only: bool,
    },
    /// Grundy value, options and best moves of one diagram
    Grundy {
        #[command(flatten)]
        board: BoardArgs,
        /// parts, e.g. 3,1
        #[arg(long)]
        lambda: String,
    },
    /// Run a verification suite; exits 0 iff there are no violations
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        max_sum: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Export the game graph
    Graph {
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Serve the HTTP API and static files
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
        /// directory of static assets served outside /api
        #[arg(long = "static")]
        static_dir: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let max = cli.max_positions;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match cli.command {
        Command::Enumerate { board, format, members_only } => {
            commands::enumerate(&board.board()?, max, format, members_only, &mut out)?;
            ExitCode::SUCCESS
        }
        Command::Grundy { board, lambda } => {
            let board = board.board()?;
            let lambda = board.partition(lambda.parse::<Partition>()?.parts())?;
            commands::grundy(&board, &lambda, max, &mut out)?;
            ExitCode::SUCCESS
        }
        Command::Verify { suite, max_sum, max_n } => {
            let violations = commands::verify(suite, max_sum, max_n, max, &mut out)?;
            if violations == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Graph { board, format } => {
            commands::graph(&board.board()?, format, max, &mut out)?;
            ExitCode::SUCCESS
        }
        Command::Serve { port, host, static_dir } => {
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(serve(SocketAddr::new(host, port), AppState::new(max), static_dir))?;
            ExitCode::SUCCESS
        }
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
