use clap::Parser;

fn main() {
    let cli = avleib::Cli::parse();
    let json = cli.json;
    let out = avleib::run(cli);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&out.json).expect("reports serialize")
        );
    } else {
        print!("{}", out.text);
    }
    std::process::exit(out.code);
}
