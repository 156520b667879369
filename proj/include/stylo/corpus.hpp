#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Corpus loading, validation, minimum-length filtering, and cue/reference
// splitting for the completion experiment.
//
// A "word" throughout this module is a maximal run of non-whitespace
// characters. Splits are byte-exact: cue_text + separator + reference_text
// reconstructs the original instance text.

namespace stylo::corpus {

enum class Platform { reddit, youtube };
enum class Ses { lower, upper };

std::string_view to_string(Platform p);
std::string_view to_string(Ses s);
Platform platform_from_string(std::string_view s);
Ses ses_from_string(std::string_view s);

inline constexpr std::string_view kHumanAuthor = "human";

struct Instance {
    std::string id;
    Platform platform = Platform::reddit;
    Ses ses = Ses::lower;
    std::string author; // "human" or a model name
    std::optional<std::string> prompt_variant; // "imp" | "els" | "els_ses"; set iff author != human
    std::string text;

    bool is_human() const { return author == kHumanAuthor; }
    int word_count() const;
};

struct Corpus {
    std::vector<Instance> instances;

    size_t size() const { return instances.size(); }
    bool empty() const { return instances.empty(); }
};

// One corpus unit split into a prompt cue and a held-out continuation.
// `separator` holds the whitespace between the last cue word and the first
// reference word, so the original text is cue_text + separator +
// reference_text byte-for-byte.
struct SplitInstance {
    std::string instance_id;
    std::string cue_text;
    std::string separator;
    std::string reference_text;
    int cue_words = 0;
};

// Loads a JSONL corpus: one object per line with keys id, platform, ses,
// author, prompt_variant, text. Collects every malformed line and throws a
// single ValidationError listing line numbers; duplicate ids are errors.
Corpus load_corpus(const std::filesystem::path& path);

// Writes the corpus back out in the same JSONL schema (UTF-8, LF).
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Parses a single JSONL line; `line_no` is for error messages only.
Instance parse_instance_line(std::string_view line, long line_no);
std::string instance_to_json(const Instance& inst);

// Keeps instances with at least `min_words` words; order preserved.
Corpus filter_min_words(const Corpus& corpus, int min_words);

// Splits `instance.text` after its `cue_words`-th word. The instance must
// contain strictly more than `cue_words` words (the reference side may not
// be empty).
SplitInstance split_for_prompting(const Instance& instance, int cue_words);

// Context-length ablation: filter once at `min_words`, then split every
// surviving instance at each cue length. Every cue length therefore covers
// the identical instance set.
std::map<int, std::vector<SplitInstance>> ablation_splits(const Corpus& corpus,
                                                          const std::vector<int>& cue_lengths,
                                                          int min_words);

} // namespace stylo::corpus
