//! Driving the command line from code: a census of random rooted posets.

fn main() {
    let args = ["polynerve", "census", "--size", "5", "--samples", "8", "--seed", "1", "--lambda", "2.1,1^3"];
    let code = polynerve::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
