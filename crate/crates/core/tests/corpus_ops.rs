use std::fs;
use std::path::Path;

use codevocab::corpus::{self, Split, DEFAULT_RATIOS};
use codevocab::pipeline::{self, NonEnglishPolicy};
use codevocab::{lex, PipelineConfig, Processed};

fn write(root: &Path, rel: &str, content: &str) {
    let p = root.join(rel);
    fs::create_dir_all(p.parent().unwrap()).unwrap();
    fs::write(p, content).unwrap();
}

#[test]
fn ten_files_three_clone_groups() {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path();
    // Groups: A (3 copies), B (2 copies, one CRLF), C (2 copies); 3 unique files.
    let a = "class A {}\n";
    let b = "class B {\n  int x;\n}\n";
    let c = "class C { void f() {} }\n";
    write(root, "p1/A.java", a);
    write(root, "p2/src/A.java", a);
    write(root, "p3/A2.java", a);
    write(root, "p1/B.java", b);
    write(root, "p3/deep/x/B.java", &b.replace('\n', "\r\n"));
    write(root, "p2/C.java", c);
    write(root, "p3/C.java", c);
    write(root, "p1/U1.java", "class U1 {}\n");
    write(root, "p2/U2.java", "class U2 {}\n");
    write(root, "p3/U3.java", "class U3 {}\n");
    let ps = corpus::ingest(root, &["java"]).unwrap();
    assert_eq!(ps.file_count(), 10);
    let (d, index) = corpus::dedup(&ps);
    assert_eq!(d.file_count(), 3 + 3);
    assert_eq!(index.duplicates, 4);
    let kept: Vec<String> = d.files().map(|(n, _)| n).collect();
    assert!(kept.contains(&"p1/A.java".to_string()));
    assert!(kept.contains(&"p1/B.java".to_string()));
    assert!(kept.contains(&"p2/C.java".to_string()));
}

#[test]
fn empty_root_gives_empty_set() {
    let dir = tempfile::tempdir().unwrap();
    let ps = corpus::ingest(dir.path(), &["java"]).unwrap();
    assert!(ps.projects.is_empty());
    assert_eq!(ps.file_count(), 0);
    assert!(corpus::split(&ps, DEFAULT_RATIOS, 1).is_err());
}

#[test]
fn two_projects_of_three_files() {
    let dir = tempfile::tempdir().unwrap();
    for p in ["a", "b"] {
        for f in ["X", "Y", "Z"] {
            write(dir.path(), &format!("{p}/{f}.java"), &format!("class {p}{f} {{}}"));
        }
    }
    let ps = corpus::ingest(dir.path(), &["java"]).unwrap();
    assert_eq!(ps.projects.len(), 2);
    assert_eq!(ps.file_count(), 6);
}

#[test]
fn split_assignment_is_a_partition_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    for i in 0..20 {
        write(dir.path(), &format!("proj{i:02}/Main.java"), &format!("class M{i} {{}}"));
    }
    let ps = corpus::ingest(dir.path(), &["java"]).unwrap();
    let a = corpus::split(&ps, DEFAULT_RATIOS, 42).unwrap();
    let b = corpus::split(&ps, DEFAULT_RATIOS, 42).unwrap();
    assert_eq!(a.manifest(), b.manifest());
    let sizes: Vec<usize> = Split::ALL.iter().map(|&s| a.in_split(s).count()).collect();
    assert_eq!(sizes, vec![14, 3, 3]);
    assert_eq!(a.manifest().lines().count(), 20);
}

#[test]
fn nonenglish_filter_only_hits_the_german_project() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/corpus");
    let ps = corpus::ingest(&root, &["java"]).unwrap();
    let config = PipelineConfig {
        nonenglish_policy: NonEnglishPolicy::filter_files(),
        ..Default::default()
    };
    let mut filtered = Vec::new();
    for (name, path) in ps.files() {
        let text = fs::read_to_string(path).unwrap();
        if let Processed::Filtered {
            code_ratio,
            code_and_strings_ratio,
        } = pipeline::apply(&lex(&text), &config)
        {
            assert!(code_ratio > 0.006 || code_and_strings_ratio > 0.019);
            filtered.push(name);
        }
    }
    assert!(!filtered.is_empty());
    assert!(filtered.iter().all(|n| n.starts_with("rechnung-app/")), "{filtered:?}");
}
