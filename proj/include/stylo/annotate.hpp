#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

// Raw text -> TaggedDoc: tokenization, sentence segmentation, syllable
// counting. POS tagging lives in tagger.hpp, CoNLL-U ingestion in conllu.hpp.

namespace stylo::annotate {

// The 17-tag universal POS inventory.
const std::vector<std::string>& upos_inventory();
bool is_valid_upos(std::string_view tag);

struct Token {
    std::string form;
    std::string lower;
    std::string upos;
    std::string xpos;               // fine-grained (PTB-style); empty when unavailable
    std::optional<int> head;        // sentence-local index, 0 = root
    std::string deprel;             // empty when unavailable
    std::optional<bool> entity;     // named-entity flag, when annotated

    bool is_punct() const { return upos == "PUNCT"; }
};

struct Sentence {
    std::vector<Token> tokens;
};

enum class Provenance { builtin_tagger, ingested };

struct TaggedDoc {
    std::string instance_id;
    std::vector<Sentence> sentences;
    Provenance provenance = Provenance::builtin_tagger;

    size_t token_count() const;
    bool has_xpos() const;     // every token carries a fine-grained tag
    bool has_heads() const;    // every token carries a head index
    bool has_entities() const; // at least one token carries an entity flag
};

// A token with its byte span in the original text. Forms are exact byte
// slices, so concatenating forms with the inter-token gaps reconstructs the
// input.
struct Span {
    std::string form;
    size_t begin = 0;
    size_t end = 0;
};

// Whitespace split, then leading/trailing punctuation detachment (runs of the
// same punctuation character stay together: "..." is one token) and standard
// clitic splitting (n't 's 're 've 'll 'd 'm).
std::vector<Span> tokenize_spans(std::string_view text);
std::vector<std::string> tokenize(std::string_view text);

// Sentence segmentation over a token stream. A boundary follows . ! ?
// (plus any closing quotes/brackets) unless the period ends a known
// abbreviation or a single capital letter (an initial). Token-free input
// yields no sentences; input without terminators is one sentence.
class SentenceSplitter {
public:
    // Loads the bundled abbreviation list (data/abbreviations.txt).
    static SentenceSplitter load_default();
    explicit SentenceSplitter(std::unordered_set<std::string> abbreviations);

    std::vector<std::vector<std::string>> split(const std::vector<std::string>& tokens) const;

private:
    std::unordered_set<std::string> abbreviations_; // lowercased, without the final period
};

// Vowel-group heuristic with silent-e subtraction and common-suffix
// corrections; never returns less than 1.
int count_syllables(std::string_view word);

} // namespace stylo::annotate
