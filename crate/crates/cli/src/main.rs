use std::io::Write as _;

fn main() {
    let out = dsblock_cli::commands::run_args(std::env::args_os());
    if out.code == 2 {
        let _ = write!(std::io::stderr(), "{}", out.text);
    } else {
        let _ = write!(std::io::stdout(), "{}", out.text);
    }
    std::process::exit(out.code);
}
