//! Writes every built-in fixture to `<dir>/<name>.json` (default `fixtures`).

use std::path::PathBuf;

use bihom_workbench::fixtures;
use bihom_workbench::format::serialize;

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir).expect("create fixture directory");
    for (name, f) in fixtures::all().expect("fixtures build") {
        let path = dir.join(format!("{}.json", name));
        std::fs::write(&path, serialize(&f)).expect("write fixture");
        println!("{}", path.display());
    }
}
