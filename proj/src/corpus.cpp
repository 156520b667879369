#include "stylo/corpus.hpp"

#include "stylo/errors.hpp"
#include "stylo/text.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace stylo::corpus {

using nlohmann::json;

std::string_view to_string(Platform p) {
    return p == Platform::reddit ? "reddit" : "youtube";
}

std::string_view to_string(Ses s) {
    return s == Ses::lower ? "lower" : "upper";
}

Platform platform_from_string(std::string_view s) {
    if (s == "reddit") return Platform::reddit;
    if (s == "youtube") return Platform::youtube;
    throw ValidationError("unknown platform: '" + std::string(s) + "' (expected reddit|youtube)");
}

Ses ses_from_string(std::string_view s) {
    if (s == "lower") return Ses::lower;
    if (s == "upper") return Ses::upper;
    throw ValidationError("unknown ses: '" + std::string(s) + "' (expected lower|upper)");
}

int Instance::word_count() const {
    return text::count_words(text);
}

namespace {

const std::unordered_set<std::string>& variant_names() {
    static const std::unordered_set<std::string> v{"imp", "els", "els_ses"};
    return v;
}

std::string require_string(const json& obj, const char* field, long line_no) {
    auto it = obj.find(field);
    if (it == obj.end() || it->is_null()) {
        throw ParseError(std::string("missing required field \"") + field + "\"", line_no);
    }
    if (!it->is_string()) {
        throw ParseError(std::string("field \"") + field + "\" must be a string", line_no);
    }
    return it->get<std::string>();
}

} // namespace

Instance parse_instance_line(std::string_view line, long line_no) {
    json obj;
    try {
        obj = json::parse(line);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!obj.is_object()) {
        throw ParseError("line is not a JSON object", line_no);
    }

    Instance inst;
    inst.id = require_string(obj, "id", line_no);
    try {
        inst.platform = platform_from_string(require_string(obj, "platform", line_no));
        inst.ses = ses_from_string(require_string(obj, "ses", line_no));
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), line_no);
    }
    inst.author = require_string(obj, "author", line_no);
    if (inst.author.empty()) {
        throw ParseError("field \"author\" must be non-empty", line_no);
    }

    if (auto it = obj.find("prompt_variant"); it != obj.end() && !it->is_null()) {
        if (!it->is_string()) {
            throw ParseError("field \"prompt_variant\" must be a string or null", line_no);
        }
        std::string v = it->get<std::string>();
        if (!variant_names().count(v)) {
            throw ParseError("unknown prompt_variant \"" + v + "\" (expected imp|els|els_ses)", line_no);
        }
        inst.prompt_variant = std::move(v);
    }

    if (inst.is_human() && inst.prompt_variant) {
        throw ParseError("prompt_variant must be null for human-authored instances", line_no);
    }
    if (!inst.is_human() && !inst.prompt_variant) {
        throw ParseError("prompt_variant required when author is a model (\"" + inst.author + "\")",
                         line_no);
    }

    inst.text = require_string(obj, "text", line_no);
    if (text::trim(inst.text).empty()) {
        throw ParseError("field \"text\" is empty after trimming", line_no);
    }
    return inst;
}

std::string instance_to_json(const Instance& inst) {
    json obj;
    obj["id"] = inst.id;
    obj["platform"] = std::string(to_string(inst.platform));
    obj["ses"] = std::string(to_string(inst.ses));
    obj["author"] = inst.author;
    if (inst.prompt_variant) {
        obj["prompt_variant"] = *inst.prompt_variant;
    } else {
        obj["prompt_variant"] = nullptr;
    }
    obj["text"] = inst.text;
    return obj.dump();
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open corpus file: " + path.string());
    }

    Corpus corpus;
    std::unordered_set<std::string> seen_ids;
    std::vector<std::string> problems;

    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (text::trim(line).empty()) continue;
        try {
            Instance inst = parse_instance_line(line, line_no);
            if (!seen_ids.insert(inst.id).second) {
                problems.push_back("line " + std::to_string(line_no) + ": duplicate id \"" +
                                   inst.id + "\"");
                continue;
            }
            corpus.instances.push_back(std::move(inst));
        } catch (const ParseError& e) {
            problems.push_back(e.what());
        }
    }

    if (!problems.empty()) {
        std::ostringstream msg;
        msg << path.string() << ": " << problems.size() << " invalid line(s):";
        for (const auto& p : problems) msg << "\n  " << p;
        throw ValidationError(msg.str());
    }
    return corpus;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot open for writing: " + path.string());
    }
    for (const auto& inst : corpus.instances) {
        out << instance_to_json(inst) << '\n';
    }
}

Corpus filter_min_words(const Corpus& corpus, int min_words) {
    if (min_words < 1) {
        throw ValidationError("min_words must be >= 1");
    }
    Corpus out;
    out.instances.reserve(corpus.instances.size());
    for (const auto& inst : corpus.instances) {
        if (inst.word_count() >= min_words) out.instances.push_back(inst);
    }
    return out;
}

SplitInstance split_for_prompting(const Instance& instance, int cue_words) {
    if (cue_words < 1) {
        throw ValidationError("cue_words must be >= 1");
    }
    const std::string& t = instance.text;

    // Walk to the end of the cue_words-th word.
    size_t i = 0;
    int words_seen = 0;
    size_t cue_end = std::string::npos;
    while (i < t.size()) {
        while (i < t.size() && text::is_ascii_space(t[i])) ++i;
        if (i >= t.size()) break;
        while (i < t.size() && !text::is_ascii_space(t[i])) ++i;
        ++words_seen;
        if (words_seen == cue_words) {
            cue_end = i;
            break;
        }
    }
    if (cue_end == std::string::npos) {
        throw ValidationError("instance \"" + instance.id + "\" has only " +
                              std::to_string(words_seen) + " words; cannot take a " +
                              std::to_string(cue_words) + "-word cue");
    }

    size_t ref_begin = cue_end;
    while (ref_begin < t.size() && text::is_ascii_space(t[ref_begin])) ++ref_begin;
    if (ref_begin >= t.size()) {
        throw ValidationError("instance \"" + instance.id + "\" has no text left after a " +
                              std::to_string(cue_words) + "-word cue (empty reference disallowed)");
    }

    SplitInstance split;
    split.instance_id = instance.id;
    split.cue_text = t.substr(0, cue_end);
    split.separator = t.substr(cue_end, ref_begin - cue_end);
    split.reference_text = t.substr(ref_begin);
    split.cue_words = cue_words;
    return split;
}

std::map<int, std::vector<SplitInstance>> ablation_splits(const Corpus& corpus,
                                                          const std::vector<int>& cue_lengths,
                                                          int min_words) {
    for (int len : cue_lengths) {
        if (len >= min_words) {
            throw ConfigError("cue length " + std::to_string(len) +
                              " must be smaller than the minimum word filter " +
                              std::to_string(min_words));
        }
        if (len < 1) {
            throw ConfigError("cue length must be >= 1");
        }
    }

    Corpus filtered = filter_min_words(corpus, min_words);
    std::map<int, std::vector<SplitInstance>> out;
    for (int len : cue_lengths) {
        auto& splits = out[len];
        splits.reserve(filtered.instances.size());
        for (const auto& inst : filtered.instances) {
            splits.push_back(split_for_prompting(inst, len));
        }
    }
    return out;
}

} // namespace stylo::corpus
