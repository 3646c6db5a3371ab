//! Regenerates the canonical algebra definition files under `data/` from the
//! builtin presentations. Run from the workspace root with
//! `cargo run -p frobkit-cli --example regen_data`.

use std::fs;
use std::path::Path;

use frobkit::frobenius::builtin_presentation;
use frobkit_cli::parser::{parse_algebra_file, print_presentation};

fn main() {
    let out_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    fs::create_dir_all(&out_dir).expect("create data directory");
    let files = [
        ("complex", "complex.frob"),
        ("poly:2", "poly2.frob"),
        ("group:Z2", "z2.frob"),
        ("group:S3", "s3.frob"),
        ("s3alt", "s3alt.frob"),
        ("qpoly:i", "qpolyi.frob"),
    ];
    for (builtin, file_name) in files {
        let pres = builtin_presentation(builtin, None).expect("builtin exists");
        let text = print_presentation(&pres);
        // The emitted text must be a fixed point of parse → print.
        let reparsed = parse_algebra_file(&text).expect("canonical text parses");
        assert_eq!(
            print_presentation(reparsed.presentation()),
            text,
            "{builtin}: canonical text is not a fixed point"
        );
        assert_eq!(
            reparsed.presentation(),
            &pres,
            "{builtin}: round trip changed the presentation"
        );
        let path = out_dir.join(file_name);
        fs::write(&path, &text).expect("write data file");
        println!("wrote {} ({} bytes)", path.display(), text.len());
    }
}
