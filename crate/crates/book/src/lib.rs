//! Every chapter of the guide in `book/src` is included here so that
//! `cargo test` runs its Rust snippets as doctests.

macro_rules! chapters {
    ($($name:ident => $file:literal),* $(,)?) => {
        /// Chapter files, relative to `book/src`.
        pub const CHAPTERS: &[&str] = &[$($file),*];
        $(
            #[cfg(doctest)]
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            pub mod $name {}
        )*
    };
}

chapters! {
    introduction => "introduction.md",
    tracts => "tracts.md",
    fmatroids => "fmatroids.md",
    vectors => "vectors.md",
    minors => "minors.md",
    properties => "properties.md",
    composition => "composition.md",
    phase => "phase.md",
    cli => "cli.md",
}
