use std::io;

fn main() {
    let code = scherk_hopf::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
