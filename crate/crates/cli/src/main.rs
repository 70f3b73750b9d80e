use clap::Parser;
use midpoint_ellipse_cli::args::Cli;
use midpoint_ellipse_cli::cmd;

fn main() {
    let cli = Cli::parse();
    if let Err(err) = cmd::run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
