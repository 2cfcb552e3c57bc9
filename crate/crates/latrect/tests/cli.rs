use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const OFFLINE_URL: &str = "http://127.0.0.1:9";

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Run the binary with an isolated cache and an unreachable OEIS endpoint.
fn latrect(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latrect"))
        .args(args)
        .env("LATRECT_OEIS_CACHE", cache)
        .env("LATRECT_OEIS_URL", OFFLINE_URL)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn ascii_renders_match_goldens() {
    let cache = tempfile::tempdir().unwrap();
    for (spec, file) in [
        ("aztec:1", "aztec1.txt"),
        ("biscuit:2", "biscuit2.txt"),
        ("staircase:3:dl", "staircase3dl.txt"),
    ] {
        let out = latrect(&["render", spec, "--format", "ascii"], cache.path());
        assert_eq!(code(&out), 0);
        assert_eq!(out.stdout, std::fs::read(golden(file)).unwrap(), "{spec}");
    }
}

#[test]
fn json_count_matches_golden_and_is_stable() {
    let cache = tempfile::tempdir().unwrap();
    let args = [
        "--json",
        "--no-timing",
        "count",
        "aztec:2",
        "--method",
        "all",
    ];
    let first = latrect(&args, cache.path());
    let second = latrect(&args, cache.path());
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(
        first.stdout,
        std::fs::read(golden("count_aztec2.json")).unwrap()
    );
}

#[test]
fn render_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.svg");
    let out = latrect(
        &[
            "render",
            "biscuit:4",
            "--format",
            "svg",
            "--axis",
            "--out",
            path.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<rect ").count(), 25);
    assert!(svg.contains(r#"x1="0.5""#));
}

#[test]
fn usage_errors_exit_2() {
    let cache = tempfile::tempdir().unwrap();
    for args in [
        &["count", "staircase:0"][..],
        &["count", "hexagon:3"],
        &["count", "aztec:50", "--method", "naive"],
        &["bijections", "--map", "nosuch"],
        &["oeis", "--ids", "A999999"],
        &["verify", "--max-n", "0"],
        &["render", "aztec:2", "--format", "ascii", "--axis"],
        &["nosuchcommand"],
    ] {
        let out = latrect(args, cache.path());
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn cache_mismatch_exits_3() {
    let cache = tempfile::tempdir().unwrap();
    // a(1..3) of the Aztec diamond sequence with the third term wrong
    std::fs::write(cache.path().join("A330805.bfile"), "1 9\n2 51\n3 160\n").unwrap();
    let out = latrect(
        &[
            "oeis", "--ids", "A330805", "--source", "cache", "--terms", "3",
        ],
        cache.path(),
    );
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("n=3"));

    let ok = latrect(
        &[
            "oeis", "--ids", "A330805", "--source", "cache", "--terms", "2",
        ],
        cache.path(),
    );
    assert_eq!(code(&ok), 0);
}

#[test]
fn corrupt_cache_exits_3() {
    let cache = tempfile::tempdir().unwrap();
    std::fs::write(cache.path().join("A002417.bfile"), "1 1\n2 eight\n").unwrap();
    let out = latrect(
        &["oeis", "--ids", "A002417", "--source", "cache"],
        cache.path(),
    );
    assert_eq!(code(&out), 3);
}

#[test]
fn unreachable_network_exits_4() {
    let cache = tempfile::tempdir().unwrap();
    let out = latrect(
        &["oeis", "--ids", "A213840", "--source", "network"],
        cache.path(),
    );
    assert_eq!(code(&out), 4);
    let miss = latrect(
        &["oeis", "--ids", "A213840", "--source", "cache"],
        cache.path(),
    );
    assert_eq!(code(&miss), 4);
}

#[test]
fn network_failure_uses_a_good_cache() {
    let cache = tempfile::tempdir().unwrap();
    std::fs::write(cache.path().join("A004320.bfile"), "0 0\n1 3\n2 16\n3 50\n").unwrap();
    let out = latrect(
        &[
            "oeis", "--ids", "A004320", "--source", "network", "--terms", "3",
        ],
        cache.path(),
    );
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("3/3 from cache"));
}
