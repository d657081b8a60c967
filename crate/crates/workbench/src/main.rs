fn main() {
    let (out, code) = bihom_workbench::cli::run(std::env::args_os());
    if !out.is_empty() {
        print!("{}", out);
    }
    std::process::exit(code);
}
