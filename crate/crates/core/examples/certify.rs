//! Prints the certificate for `L(n)`: `cargo run --release --example certify -- 5`.

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    match liedim::counterexamples::verify(n) {
        Ok(cert) => println!("{}", cert.to_json()),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
