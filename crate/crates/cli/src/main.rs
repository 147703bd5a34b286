use clap::Parser;

use orbitgames_cli::commands::{run, Cli};

fn main() {
    // Die quietly when a downstream pipe closes early.
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
