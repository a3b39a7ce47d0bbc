fn main() {
    std::process::exit(sphere_pentagons::cli::run(std::env::args_os()));
}
