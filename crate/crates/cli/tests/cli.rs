use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_multisum"))
}

fn write(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn strength_of_c5() {
    let inst = write("strength_c5.txt", "p multicycle 5\nm 1 1 1 1 1\n");
    let out = run(&["strength", inst.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "delta 2\nload_bound 3\nchromatic_index 3\nedge_strength 3\n");
}

#[test]
fn color_c5() {
    let inst = write("color_c5.txt", "p multicycle 5\nm 1 1 1 1 1\n");
    let out = run(&["color", inst.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("multisum-coloring 1\n"));
    assert!(text.contains("\nsum 9\n"));
    assert!(text.contains("\ncolors_used 3\n"));
    assert!(text.contains("\nalgorithm general\n"));
}

#[test]
fn color_then_verify_round_trips() {
    for (name, text) in [
        ("rt_odd.txt", "p multicycle 7\nm 3 1 2 2 1 3 1\n"),
        ("rt_even.txt", "p multicycle 6\nm 2 2 1 3 1 2\n"),
        ("rt_path.txt", "p multipath 4\nm 2 1 3 1\n"),
    ] {
        let inst = write(name, text);
        let colored = run(&["color", inst.to_str().unwrap()]);
        assert_eq!(colored.status.code(), Some(0), "{name}");
        let verified = run_stdin(&["verify", inst.to_str().unwrap(), "-", "--cost", "sum"], &colored.stdout);
        assert_eq!(verified.status.code(), Some(0), "{name}: {}", stdout(&verified));
        assert!(stdout(&verified).ends_with("verdict ok\n"));
    }
}

#[test]
fn tampered_coloring_fails_verification() {
    let inst = write("tamper.txt", "p multicycle 5\nm 1 1 1 1 1\n");
    let colored = stdout(&run(&["color", inst.to_str().unwrap()]));
    let line = colored.lines().find(|l| l.starts_with("f 0 0 ")).unwrap();
    let mut fields: Vec<String> = line.split(' ').map(String::from).collect();
    let c: u32 = fields[5].parse().unwrap();
    fields[5] = (c % 3 + 1).to_string();
    let tampered = colored.replace(line, &fields.join(" "));
    let out = run_stdin(&["verify", inst.to_str().unwrap(), "-"], tampered.as_bytes());
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
}

#[test]
fn malformed_instance_exits_2() {
    let inst = write("malformed.txt", "p multicycle 3\nm 1 two 1\n");
    let out = run(&["strength", inst.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(run(&["strength", "/nonexistent/instance"]).status.code(), Some(2));
    assert_eq!(run(&["color", "--algorithm", "bogus", inst.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn output_is_byte_stable() {
    let inst = write("stable.txt", "p multicycle 9\nm 2 3 1 1 2 3 1 2 2\n");
    let a = run(&["color", inst.to_str().unwrap()]).stdout;
    let b = run(&["color", inst.to_str().unwrap()]).stdout;
    assert_eq!(a, b);
    let g1 = run(&["gen", "--type", "multicycle", "--n", "8", "--seed", "4"]).stdout;
    let g2 = run(&["gen", "--type", "multicycle", "--n", "8", "--seed", "4"]).stdout;
    assert_eq!(g1, g2);
}

#[test]
fn oracle_and_reduce() {
    let inst = write("bip.txt", "p multigraph 4 5\ne 0 1\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
    let start = "multisum-coloring 1\np multigraph 4 5\ne 0 1\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n\
                 algorithm manual\nsum 11\ncolors_used 4\nprofile 2 1 1 1\n\
                 f 0 0 0 1 1\nf 1 0 0 1 4\nf 2 0 1 2 2\nf 3 0 2 3 1\nf 4 0 3 0 3\n";
    let col = write("bip.col", start);
    let out = run(&["reduce", inst.to_str().unwrap(), col.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("\nsum 9\n") && text.contains("\ncolors_used 3\n"), "{text}");

    let out = run(&["oracle", inst.to_str().unwrap()]);
    assert!(stdout(&out).contains("\ncost sum 9\n"));
    let out = run(&["oracle", inst.to_str().unwrap(), "--cost", "occp:1,10,100"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\ncost occp:1,10,100 "));
}

#[test]
fn check_sweep_passes() {
    let out = run(&["check", "--family", "multicycle", "--n-max", "5", "--mult-max", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("PASS 56 instances\n"));
}
