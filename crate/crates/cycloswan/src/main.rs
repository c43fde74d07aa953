fn main() {
    // die quietly on closed pipes (e.g. `cycloswan verify | head`) like other
    // unix tools instead of panicking in println!
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(cycloswan::cli::run(std::env::args_os()));
}
