use std::panic;

fn main() {
    // exit code 1 is reserved for internal failures; map panics onto it
    let result = panic::catch_unwind(radsolve::cli::run);
    match result {
        Ok(code) => std::process::exit(code),
        Err(_) => std::process::exit(1),
    }
}
