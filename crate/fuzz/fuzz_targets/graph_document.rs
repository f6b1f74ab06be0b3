#![no_main]

use libfuzzer_sys::fuzz_target;
use powergraph::document::GraphDocument;

// Any input must either be rejected with an error or parse into a document
// whose canonical text round-trips to an equal document.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = GraphDocument::parse(text) {
        let canonical = doc.to_text();
        let again = GraphDocument::parse(&canonical).expect("canonical text reparses");
        assert_eq!(doc, again);
        assert_eq!(again.to_text(), canonical);
    }
});
