//! Project ingestion, exact-content deduplication and project-level splits.
//!
//! Every immediate subdirectory of the corpus root is a project; files found
//! anywhere below it belong to it. Files sitting directly in the root are
//! not part of any project and are ignored.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use walkdir::WalkDir;

use crate::error::{Error, Result};

pub const DEFAULT_EXTENSIONS: &[&str] = &["java"];
pub const DEFAULT_RATIOS: (f64, f64, f64) = (0.70, 0.15, 0.15);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Split {
    Train,
    Validation,
    Test,
}

impl Split {
    pub const ALL: [Split; 3] = [Split::Train, Split::Validation, Split::Test];

    pub fn as_str(self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Validation => "validation",
            Split::Test => "test",
        }
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Split {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "train" => Ok(Split::Train),
            "validation" => Ok(Split::Validation),
            "test" => Ok(Split::Test),
            other => Err(Error::InvalidArgument(format!("unknown split `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Project {
    pub id: String,
    /// Paths relative to the project directory, sorted.
    pub files: Vec<PathBuf>,
    pub split: Option<Split>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectSet {
    pub root: PathBuf,
    /// Sorted by id.
    pub projects: Vec<Project>,
    /// Files that could not be read, with the reason.
    pub warnings: Vec<String>,
}

impl ProjectSet {
    pub fn file_count(&self) -> usize {
        self.projects.iter().map(|p| p.files.len()).sum()
    }

    pub fn path_of(&self, project: &Project, file: &Path) -> PathBuf {
        self.root.join(&project.id).join(file)
    }

    /// All files as `(project-id/relative-path, absolute path)`, in order.
    pub fn files(&self) -> impl Iterator<Item = (String, PathBuf)> + '_ {
        self.projects.iter().flat_map(move |p| {
            p.files
                .iter()
                .map(move |f| (corpus_path(&p.id, f), self.path_of(p, f)))
        })
    }

    pub fn in_split(&self, split: Split) -> impl Iterator<Item = &Project> {
        self.projects.iter().filter(move |p| p.split == Some(split))
    }

    /// One `<split>\t<project-id>` line per project, sorted by id. Projects
    /// without a split are omitted.
    pub fn manifest(&self) -> String {
        let mut out = String::new();
        for p in &self.projects {
            if let Some(s) = p.split {
                out.push_str(s.as_str());
                out.push('\t');
                out.push_str(&p.id);
                out.push('\n');
            }
        }
        out
    }
}

/// Parses a split manifest into project id → split.
pub fn parse_manifest(text: &str, path: &str) -> Result<BTreeMap<String, Split>> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let parse_err = |reason: String| Error::Parse {
            path: path.to_string(),
            line: i + 1,
            reason,
        };
        let (split, id) = line
            .split_once('\t')
            .ok_or_else(|| parse_err("expected `<split>\\t<project-id>`".into()))?;
        let split = split.parse().map_err(|e: Error| parse_err(e.to_string()))?;
        if out.insert(id.to_string(), split).is_some() {
            return Err(parse_err(format!("project `{id}` listed twice")));
        }
    }
    Ok(out)
}

/// `project/relative/path` with forward slashes.
pub fn corpus_path(project: &str, file: &Path) -> String {
    let mut s = project.to_string();
    for part in file.components() {
        s.push('/');
        s.push_str(&part.as_os_str().to_string_lossy());
    }
    s
}

fn matches_extension(path: &Path, extensions: &[String]) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| extensions.iter().any(|x| x == e))
}

/// Lists the projects under `root` and their files with one of `extensions`
/// (given with or without the leading dot).
pub fn ingest<S: AsRef<str>>(root: &Path, extensions: &[S]) -> Result<ProjectSet> {
    let extensions: Vec<String> = extensions
        .iter()
        .map(|e| e.as_ref().trim_start_matches('.').to_string())
        .collect();
    let entries = fs::read_dir(root).map_err(|e| Error::io(root, e))?;
    let mut warnings = Vec::new();
    let mut dirs = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(root, e))?;
        let is_dir = entry.file_type().map_err(|e| Error::io(entry.path(), e))?.is_dir();
        if is_dir {
            dirs.push(entry.file_name().to_string_lossy().into_owned());
        }
    }
    dirs.sort();

    let mut projects = Vec::with_capacity(dirs.len());
    for id in dirs {
        let dir = root.join(&id);
        let mut files = Vec::new();
        for entry in WalkDir::new(&dir).follow_links(false) {
            let entry = match entry {
                Ok(e) => e,
                Err(e) => {
                    warnings.push(format!("{}: {e}", e.path().unwrap_or(&dir).display()));
                    continue;
                }
            };
            if !entry.file_type().is_file() || !matches_extension(entry.path(), &extensions) {
                continue;
            }
            if let Err(e) = fs::File::open(entry.path()) {
                warnings.push(format!("{}: {e}", entry.path().display()));
                continue;
            }
            let rel = entry.path().strip_prefix(&dir).expect("walk stays below dir");
            files.push(rel.to_path_buf());
        }
        files.sort();
        projects.push(Project {
            id,
            files,
            split: None,
        });
    }
    for w in &warnings {
        log::warn!("skipped {w}");
    }
    Ok(ProjectSet {
        root: root.to_path_buf(),
        projects,
        warnings,
    })
}

/// SHA-256 of the content with CRLF and lone CR normalized to LF.
pub fn content_digest(bytes: &[u8]) -> [u8; 32] {
    let mut hasher = Sha256::new();
    let mut start = 0;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'\r' {
            hasher.update(&bytes[start..i]);
            hasher.update(b"\n");
            if bytes.get(i + 1) == Some(&b'\n') {
                i += 1;
            }
            start = i + 1;
        }
        i += 1;
    }
    hasher.update(&bytes[start..]);
    hasher.finalize().into()
}

pub fn hex(digest: &[u8; 32]) -> String {
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DedupIndex {
    /// Digest → retained file (`project/relative/path`).
    pub canonical: HashMap<[u8; 32], String>,
    /// Files dropped as duplicates.
    pub duplicates: usize,
}

/// Keeps one file per content digest: the one with the smallest
/// `project/relative/path`. Projects left without files stay in the set.
pub fn dedup(ps: &ProjectSet) -> (ProjectSet, DedupIndex) {
    let listed: Vec<(String, PathBuf)> = ps.files().collect();
    let hashed: Vec<(String, std::result::Result<[u8; 32], String>)> = listed
        .par_iter()
        .map(|(name, path)| {
            let digest = fs::read(path)
                .map(|b| content_digest(&b))
                .map_err(|e| format!("{}: {e}", path.display()));
            (name.clone(), digest)
        })
        .collect();

    let mut index = DedupIndex::default();
    let mut warnings = ps.warnings.clone();
    let mut unreadable = std::collections::HashSet::new();
    for (name, digest) in hashed {
        match digest {
            Ok(d) => {
                let slot = index.canonical.entry(d).or_insert_with(|| name.clone());
                if name < *slot {
                    *slot = name;
                }
            }
            Err(w) => {
                log::warn!("skipped {w}");
                warnings.push(w);
                unreadable.insert(name);
            }
        }
    }
    let retained: std::collections::HashSet<&str> =
        index.canonical.values().map(String::as_str).collect();
    let mut projects = ps.projects.clone();
    for p in &mut projects {
        p.files.retain(|f| {
            let name = corpus_path(&p.id, f);
            let keep = retained.contains(name.as_str());
            if !keep && !unreadable.contains(&name) {
                index.duplicates += 1;
            }
            keep
        });
    }
    (
        ProjectSet {
            root: ps.root.clone(),
            projects,
            warnings,
        },
        index,
    )
}

/// Number of projects going to (train, validation, test).
pub fn split_sizes(n: usize, ratios: (f64, f64, f64)) -> Result<(usize, usize, usize)> {
    let (tr, va, te) = ratios;
    if tr <= 0.0 || va <= 0.0 || te <= 0.0 || ((tr + va + te) - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidArgument(format!(
            "split ratios must be positive and sum to 1, got ({tr}, {va}, {te})"
        )));
    }
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "need at least 3 projects to split, got {n}"
        )));
    }
    let part = |r: f64| ((n as f64 * r + 1e-9).floor() as usize).max(1);
    let valid = part(va);
    let test = part(te);
    Ok((n - valid - test, valid, test))
}

/// Assigns each project a split. Projects are ordered by a seeded random
/// key (ties broken by id); the first block goes to training, then
/// validation, then test.
pub fn split(ps: &ProjectSet, ratios: (f64, f64, f64), seed: u64) -> Result<ProjectSet> {
    let (n_train, n_valid, _) = split_sizes(ps.projects.len(), ratios)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ids: Vec<&str> = ps.projects.iter().map(|p| p.id.as_str()).collect();
    ids.sort_unstable();
    let mut keyed: Vec<(u64, &str)> = ids.into_iter().map(|id| (rng.next_u64(), id)).collect();
    keyed.sort();
    let assignment: HashMap<&str, Split> = keyed
        .iter()
        .enumerate()
        .map(|(i, &(_, id))| {
            let s = if i < n_train {
                Split::Train
            } else if i < n_train + n_valid {
                Split::Validation
            } else {
                Split::Test
            };
            (id, s)
        })
        .collect();
    let mut out = ps.clone();
    for p in &mut out.projects {
        p.split = Some(assignment[p.id.as_str()]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(root: &Path, rel: &str, content: &[u8]) {
        let p = root.join(rel);
        fs::create_dir_all(p.parent().unwrap()).unwrap();
        fs::write(p, content).unwrap();
    }

    fn fake_set(n: usize) -> ProjectSet {
        ProjectSet {
            root: PathBuf::from("/nowhere"),
            projects: (0..n)
                .map(|i| Project {
                    id: format!("p{i:03}"),
                    files: vec![],
                    split: None,
                })
                .collect(),
            warnings: vec![],
        }
    }

    #[test]
    fn split_size_arithmetic() {
        assert_eq!(split_sizes(100, DEFAULT_RATIOS).unwrap(), (70, 15, 15));
        assert_eq!(split_sizes(14_436, DEFAULT_RATIOS).unwrap(), (10_106, 2_165, 2_165));
        assert_eq!(split_sizes(3, DEFAULT_RATIOS).unwrap(), (1, 1, 1));
        assert!(split_sizes(2, DEFAULT_RATIOS).is_err());
        assert!(split_sizes(10, (0.5, 0.5, 0.0)).is_err());
        assert!(split_sizes(10, (0.5, 0.3, 0.3)).is_err());
    }

    #[test]
    fn split_is_seeded_and_partitions() {
        let ps = fake_set(100);
        let a = split(&ps, DEFAULT_RATIOS, 42).unwrap();
        let b = split(&ps, DEFAULT_RATIOS, 42).unwrap();
        assert_eq!(a.manifest(), b.manifest());
        let counts: Vec<usize> = Split::ALL.iter().map(|&s| a.in_split(s).count()).collect();
        assert_eq!(counts, vec![70, 15, 15]);
        let c = split(&ps, DEFAULT_RATIOS, 43).unwrap();
        assert_ne!(a.manifest(), c.manifest());
    }

    #[test]
    fn manifest_round_trip() {
        let a = split(&fake_set(10), DEFAULT_RATIOS, 1).unwrap();
        let parsed = parse_manifest(&a.manifest(), "m").unwrap();
        assert_eq!(parsed.len(), 10);
        for p in &a.projects {
            assert_eq!(Some(parsed[&p.id]), p.split);
        }
        assert!(parse_manifest("train p1\n", "m").is_err());
        assert!(parse_manifest("dev\tp1\n", "m").is_err());
        assert!(parse_manifest("train\tp1\ntest\tp1\n", "m").is_err());
    }

    #[test]
    fn digest_normalizes_line_endings() {
        assert_eq!(content_digest(b"a\r\nb\r\n"), content_digest(b"a\nb\n"));
        assert_eq!(content_digest(b"a\rb"), content_digest(b"a\nb"));
        assert_ne!(content_digest(b"a\n\nb"), content_digest(b"a\nb"));
        assert_eq!(
            hex(&content_digest(b"")),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn ingest_groups_nested_files() {
        let dir = tempfile::tempdir().unwrap();
        let root = dir.path();
        write(root, "b/x/Y.java", b"class Y {}");
        write(root, "b/Z.java", b"class Z {}");
        write(root, "a/A.java", b"class A {}");
        write(root, "a/readme.md", b"no");
        write(root, "Top.java", b"ignored");
        let ps = ingest(root, DEFAULT_EXTENSIONS).unwrap();
        let names: Vec<String> = ps.files().map(|(n, _)| n).collect();
        assert_eq!(names, vec!["a/A.java", "b/Z.java", "b/x/Y.java"]);
        assert!(ingest(&root.join("missing"), DEFAULT_EXTENSIONS).is_err());
        assert_eq!(ingest(root, &[".md"]).unwrap().file_count(), 1);
    }

    #[test]
    fn dedup_keeps_smallest_path() {
        let dir = tempfile::tempdir().unwrap();
        let root = dir.path();
        write(root, "q/A.java", b"x\r\ny\r\n");
        write(root, "p/B.java", b"x\ny\n");
        write(root, "p/C.java", b"other");
        let ps = ingest(root, DEFAULT_EXTENSIONS).unwrap();
        let (d, index) = dedup(&ps);
        let names: Vec<String> = d.files().map(|(n, _)| n).collect();
        assert_eq!(names, vec!["p/B.java", "p/C.java"]);
        assert_eq!(index.duplicates, 1);
        assert_eq!(index.canonical.len(), 2);
        let (again, index2) = dedup(&d);
        assert_eq!(again, d);
        assert_eq!(index2.duplicates, 0);
    }
}
