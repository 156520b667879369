#pragma once

#include "stylo/annotate.hpp"

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace stylo::annotate {

// Baseline POS tagger: a frequency-ordered lexicon of fine-grained (PTB)
// tags plus suffix/shape guessing for unknown words and a pass of contextual
// patch rules. Deterministic for fixed lexicon data. Fills both xpos and the
// 17-tag upos on every token.
class Tagger {
public:
    // Loads data/tagger_lexicon.tsv from the bundled data directory.
    static const Tagger& shared();
    static Tagger load(const std::filesystem::path& lexicon_tsv);

    TaggedDoc tag(const std::vector<std::vector<std::string>>& sentences,
                  std::string instance_id) const;

    // Convenience: tokenize + segment + tag in one step.
    TaggedDoc annotate_text(std::string_view text, std::string instance_id,
                            const SentenceSplitter& splitter) const;

    bool has_tag(const std::string& lower, const std::string& xpos) const;

private:
    // Possible fine-grained tags in preference order; front() is the default.
    std::unordered_map<std::string, std::vector<std::string>> lexicon_;

    std::string guess(const std::string& form, const std::string& lower, bool sentence_initial) const;
    void patch(std::vector<Token>& toks) const;
    void assign_upos(std::vector<Token>& toks) const;
};

} // namespace stylo::annotate
