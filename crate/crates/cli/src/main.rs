fn main() {
    let args: Vec<std::ffi::OsString> = std::env::args_os().collect();
    match group_codes_cli::run(args) {
        Ok(out) => print!("{out}"),
        Err(err) => {
            eprintln!("error: {}: {}", err.code(), err.one_line());
            std::process::exit(1);
        }
    }
}
