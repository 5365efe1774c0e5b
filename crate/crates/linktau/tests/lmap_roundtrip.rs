//! Round-trip law for the document format: parsing the canonical
//! serialization of any document reproduces it exactly, and serializing
//! the parse of canonical text reproduces the text.

use rand::rngs::StdRng;
use rand::SeedableRng;

use linktau::lmap::{parse, random_document};
use linktau::serialize;

#[test]
fn serialize_then_parse_is_identity_on_documents() {
    let mut rng = StdRng::seed_from_u64(0x1a9);
    for index in 0..100 {
        let doc = random_document(&mut rng, &format!("doc{index}"));
        let text = serialize(&doc);
        let reparsed = parse(&text).unwrap_or_else(|e| panic!("doc {index}: {e}\n{text}"));
        assert_eq!(reparsed, doc, "doc {index}");
        assert_eq!(serialize(&reparsed), text, "doc {index}");
    }
}

#[test]
fn comments_and_spacing_normalize_to_canonical_text() {
    let noisy = "\
# a full-line comment
linkmap   demo
dp+    a   sign=+1    n=2   # packed
dp- b sign=-1 n=-3


pair   P  =   a   b
disk W pair=P primary=0 framed=1
      x   sign=-1   m=2
end
handles   3
";
    let doc = parse(noisy).unwrap();
    let canonical = serialize(&doc);
    assert_eq!(
        canonical,
        "linkmap demo\n\
         dp+ a sign=+1 n=2\n\
         dp- b sign=-1 n=-3\n\
         pair P = a b\n\
         disk W pair=P primary=0 framed=1\n  x sign=-1 m=2\nend\n\
         handles 3\n"
    );
    assert_eq!(parse(&canonical).unwrap(), doc);
}
