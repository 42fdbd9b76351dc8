//! Command-line goldens: each directory under `tests/golden` holds the
//! arguments (with `INPUT` standing for the input file), the input and the
//! expected standard output.

use std::fs;
use std::path::Path;
use std::process::Command;

fn run_case(dir: &Path) -> Result<(), String> {
    let args = fs::read_to_string(dir.join("args")).map_err(|e| e.to_string())?;
    let input = dir.join("input");
    let args: Vec<String> = args
        .split_whitespace()
        .map(|a| if a == "INPUT" { input.display().to_string() } else { a.to_string() })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_moongrowth")).args(&args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    let got = String::from_utf8_lossy(&out.stdout);
    let want = fs::read_to_string(dir.join("expected")).map_err(|e| e.to_string())?;
    if got != want {
        return Err(format!("output differs\n--- expected\n{want}--- got\n{got}"));
    }
    Ok(())
}

#[test]
fn cli_goldens() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut dirs: Vec<_> = fs::read_dir(&root).unwrap().map(|e| e.unwrap().path()).filter(|p| p.is_dir()).collect();
    dirs.sort();
    assert!(dirs.len() >= 12, "golden cases missing from {}", root.display());
    let failures: Vec<String> = dirs
        .iter()
        .filter_map(|d| run_case(d).err().map(|e| format!("{}: {e}", d.file_name().unwrap().to_string_lossy())))
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
