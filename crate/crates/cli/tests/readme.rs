//! Runs every `$ hermsym …` line in the README's `console` blocks and compares
//! stdout with the lines that follow it.

use std::path::PathBuf;
use std::process::Command;

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

struct Example {
    line: usize,
    args: Vec<String>,
    expected: String,
}

fn examples(readme: &str) -> Vec<Example> {
    let mut out: Vec<Example> = Vec::new();
    let mut in_console = false;
    for (i, line) in readme.lines().enumerate() {
        if line.starts_with("```") {
            in_console = line == "```console";
            continue;
        }
        if !in_console {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ hermsym ") {
            out.push(Example {
                line: i + 1,
                args: cmd.split_whitespace().map(String::from).collect(),
                expected: String::new(),
            });
        } else if let Some(ex) = out.last_mut() {
            ex.expected.push_str(line);
            ex.expected.push('\n');
        }
    }
    out
}

#[test]
fn readme_examples_match() {
    let root = workspace_root();
    let readme = std::fs::read_to_string(root.join("README.md")).expect("README.md at the workspace root");
    let examples = examples(&readme);
    assert!(examples.len() >= 15, "found only {} examples", examples.len());
    for ex in examples {
        let out = Command::new(env!("CARGO_BIN_EXE_hermsym"))
            .args(&ex.args)
            .current_dir(&root)
            .output()
            .expect("run hermsym");
        assert!(
            out.status.success(),
            "README line {}: exit {:?}, stderr {}",
            ex.line,
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(String::from_utf8(out.stdout).unwrap(), ex.expected, "README line {}", ex.line);
    }
}
