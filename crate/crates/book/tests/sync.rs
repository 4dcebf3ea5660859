use std::collections::BTreeSet;
use std::path::Path;

fn book_src() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../book/src"))
}

#[test]
fn every_chapter_is_compiled() {
    let on_disk: BTreeSet<String> = std::fs::read_dir(book_src())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|f| f.ends_with(".md") && f != "SUMMARY.md")
        .collect();
    let harness: BTreeSet<String> = tractvec_book::CHAPTERS.iter().map(|s| s.to_string()).collect();
    assert_eq!(on_disk, harness);
}

#[test]
fn summary_links_every_chapter() {
    let summary = std::fs::read_to_string(book_src().join("SUMMARY.md")).unwrap();
    for ch in tractvec_book::CHAPTERS {
        assert!(summary.contains(&format!("({ch})")), "{ch} missing from SUMMARY.md");
    }
}
