//! The generated header declares every exported symbol and is valid C.

use std::path::PathBuf;
use std::process::Command;

fn header() -> (PathBuf, String) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/dehn.h");
    let text = std::fs::read_to_string(&path).expect("header generated by build.rs");
    (path, text)
}

#[test]
fn declares_all_exports() {
    let (_, text) = header();
    let source = include_str!("../src/lib.rs");
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 20);
    for name in exports {
        assert!(text.contains(&format!("{name}(")), "{name} missing from dehn.h");
    }
    assert!(text.contains("typedef struct DehnSeminorm DehnSeminorm;"));
}

#[test]
fn compiles_as_c() {
    let (path, _) = header();
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let dir = std::env::temp_dir().join(format!("dehn-header-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use.c");
    std::fs::write(
        &src,
        "#include \"dehn.h\"\nint main(void) { uint64_t d; return dehn_slope_distance(1, 0, 0, 1, &d) == DEHN_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let out = match Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(path.parent().unwrap())
        .arg(&src)
        .output()
    {
        Ok(out) => out,
        Err(e) => {
            eprintln!("no C compiler ({cc}: {e}); header syntax not checked");
            return;
        }
    };
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
