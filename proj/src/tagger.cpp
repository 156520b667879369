#include "stylo/tagger.hpp"

#include "stylo/data_paths.hpp"
#include "stylo/errors.hpp"
#include "stylo/text.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

namespace stylo::annotate {

namespace {

const std::unordered_set<std::string>& be_forms() {
    static const std::unordered_set<std::string> s{"be",  "am",  "is",   "are", "was",
                                                   "were", "been", "being", "'s",  "'re",
                                                   "'m",   "ai" /* ain't */};
    return s;
}

const std::unordered_set<std::string>& have_forms() {
    static const std::unordered_set<std::string> s{"have", "has", "had", "having", "'ve"};
    return s;
}

const std::unordered_set<std::string>& do_forms() {
    static const std::unordered_set<std::string> s{"do", "does", "did", "doing", "done"};
    return s;
}

const std::unordered_set<std::string>& sconj_words() {
    static const std::unordered_set<std::string> s{
        "because", "if", "unless", "although", "though", "tho", "whereas", "whilst",
        "while", "whether", "lest", "albeit", "unlike"};
    return s;
}

bool is_verb_tag(const std::string& t) {
    return t.size() >= 2 && t[0] == 'V' && t[1] == 'B';
}

bool is_noun_tag(const std::string& t) {
    return t == "NN" || t == "NNS" || t == "NNP" || t == "NNPS";
}

bool is_adverb_tag(const std::string& t) {
    return t == "RB" || t == "RBR" || t == "RBS";
}

bool capitalized(const std::string& form) {
    return !form.empty() && form[0] >= 'A' && form[0] <= 'Z';
}

std::string punct_xpos(const std::string& form) {
    if (form == "," ) return ",";
    if (form == "(" || form == "[" || form == "{") return "-LRB-";
    if (form == ")" || form == "]" || form == "}") return "-RRB-";
    if (form == "\"" || form == "'" || form == "‘" || form == "’" ||
        form == "“" || form == "”")
        return "''";
    if (form == ";" || form == ":" || form == "–" || form == "—" || form == "-" ||
        form == "…")
        return ":";
    if (!form.empty() && (form[0] == '.' || form[0] == '!' || form[0] == '?')) return ".";
    if (form == "$") return "$";
    if (form == "#") return "#";
    return "NFP";
}

} // namespace

const Tagger& Tagger::shared() {
    static Tagger instance = Tagger::load(DataPaths::file("tagger_lexicon.tsv"));
    return instance;
}

Tagger Tagger::load(const std::filesystem::path& lexicon_tsv) {
    std::ifstream in(lexicon_tsv);
    if (!in) throw ConfigError("cannot open tagger lexicon: " + lexicon_tsv.string());

    Tagger tagger;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto t = text::trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto fields = text::split(t, '\t');
        if (fields.size() != 2) {
            throw ParseError("tagger lexicon expects form<TAB>tags", line_no);
        }
        std::vector<std::string> tags;
        for (auto tag : text::split(fields[1], ',')) {
            if (!tag.empty()) tags.emplace_back(tag);
        }
        if (tags.empty()) {
            throw ParseError("tagger lexicon entry with no tags", line_no);
        }
        tagger.lexicon_[std::string(fields[0])] = std::move(tags);
    }
    return tagger;
}

bool Tagger::has_tag(const std::string& lower, const std::string& xpos) const {
    auto it = lexicon_.find(lower);
    if (it == lexicon_.end()) return false;
    return std::find(it->second.begin(), it->second.end(), xpos) != it->second.end();
}

std::string Tagger::guess(const std::string& form, const std::string& lower,
                          bool sentence_initial) const {
    using text::ends_with;

    // Shape: numbers and ordinals.
    bool has_digit = false, all_digitish = !lower.empty();
    for (char c : lower) {
        if (c >= '0' && c <= '9') {
            has_digit = true;
        } else if (c != '.' && c != ',' && c != '-' && c != '/' && c != '%') {
            all_digitish = false;
        }
    }
    if (has_digit) {
        if (ends_with(lower, "st") || ends_with(lower, "nd") || ends_with(lower, "rd") ||
            ends_with(lower, "th")) {
            return "JJ";
        }
        if (all_digitish) return "CD";
        return "CD";
    }

    if (ends_with(lower, "ly")) return "RB";
    if (ends_with(lower, "ings")) return "NNS";
    if (ends_with(lower, "ing") && lower.size() > 4) return "VBG";
    if (ends_with(lower, "ed") && lower.size() > 3) return "VBD";
    if (ends_with(lower, "tion") || ends_with(lower, "sion") || ends_with(lower, "ment") ||
        ends_with(lower, "ness") || ends_with(lower, "ship") || ends_with(lower, "hood") ||
        ends_with(lower, "ism") || ends_with(lower, "ity") || ends_with(lower, "ance") ||
        ends_with(lower, "ence") || ends_with(lower, "ancy") || ends_with(lower, "ency")) {
        return "NN";
    }
    if (ends_with(lower, "tions") || ends_with(lower, "sions") || ends_with(lower, "ments") ||
        ends_with(lower, "nesses") || ends_with(lower, "ships") || ends_with(lower, "isms") ||
        ends_with(lower, "ities") || ends_with(lower, "ances") || ends_with(lower, "ences")) {
        return "NNS";
    }
    if (ends_with(lower, "ier")) return "JJR";
    if (ends_with(lower, "iest")) return "JJS";
    if (ends_with(lower, "ous") || ends_with(lower, "ful") || ends_with(lower, "less") ||
        ends_with(lower, "ish") || ends_with(lower, "ive") || ends_with(lower, "able") ||
        ends_with(lower, "ible") || ends_with(lower, "ical")) {
        return "JJ";
    }
    if (ends_with(lower, "ize") || ends_with(lower, "ise") || ends_with(lower, "ify")) {
        return "VB";
    }
    if (ends_with(lower, "izes") || ends_with(lower, "ises") || ends_with(lower, "ifies")) {
        return "VBZ";
    }

    if (capitalized(form) && !sentence_initial) return "NNP";

    if (ends_with(lower, "s") && lower.size() > 2 && !ends_with(lower, "ss") &&
        !ends_with(lower, "us") && !ends_with(lower, "is")) {
        return "NNS";
    }

    if (capitalized(form)) return "NNP";
    return "NN";
}

void Tagger::patch(std::vector<Token>& toks) const {
    const size_t n = toks.size();

    auto has = [&](size_t i, const char* tag) { return toks[i].xpos == tag; };
    auto can_be = [&](size_t i, const char* tag) { return has_tag(toks[i].lower, tag); };
    auto next_content = [&](size_t i) -> size_t {
        // Skips adverbs and negation when looking at what a verb governs.
        size_t j = i + 1;
        while (j < n && (is_adverb_tag(toks[j].xpos) || toks[j].lower == "not" ||
                         toks[j].lower == "n't")) {
            ++j;
        }
        return j;
    };

    for (int pass = 0; pass < 2; ++pass) {
        for (size_t i = 0; i < n; ++i) {
            Token& t = toks[i];

            // Infinitival "to" + base verb.
            if (t.xpos == "TO") {
                size_t j = next_content(i);
                if (j < n && (has(j, "VBP") || has(j, "NN") || has(j, "VB")) &&
                    can_be(j, "VB")) {
                    toks[j].xpos = "VB";
                }
                continue;
            }

            // Modal + base verb.
            if (t.xpos == "MD") {
                size_t j = next_content(i);
                if (j < n && !has(j, "VB") && can_be(j, "VB")) toks[j].xpos = "VB";
                continue;
            }

            // be/have + past participle.
            if (be_forms().count(t.lower) || have_forms().count(t.lower) || t.lower == "'d" ||
                t.lower == "ai") {
                size_t j = next_content(i);
                if (j < n && has(j, "VBD") &&
                    (can_be(j, "VBN") || text::ends_with(toks[j].lower, "ed"))) {
                    toks[j].xpos = "VBN";
                }
            }

            // Determiner/possessive + verb-shaped word is a noun.
            if ((t.xpos == "DT" || t.xpos == "PRP$" || t.xpos == "JJ") && i + 1 < n) {
                Token& nx = toks[i + 1];
                if ((nx.xpos == "VB" || nx.xpos == "VBP") && can_be(i + 1, "NN")) {
                    nx.xpos = "NN";
                }
                if (t.xpos == "DT" && nx.xpos == "VBG" && can_be(i + 1, "NN")) {
                    nx.xpos = "NN";
                }
            }

            // Noun + VBD that can be a participle + "by" looks like a reduced
            // relative ("the solution produced by ...").
            if (t.xpos == "VBD" && i > 0 && is_noun_tag(toks[i - 1].xpos) && i + 1 < n &&
                toks[i + 1].lower == "by" &&
                (can_be(i, "VBN") || text::ends_with(t.lower, "ed"))) {
                t.xpos = "VBN";
            }

            // Clause-initial participle ("Built in a single week, ...").
            if (t.xpos == "VBD" && i == 0 && i + 1 < n && toks[i + 1].xpos == "IN" &&
                (can_be(i, "VBN") || text::ends_with(t.lower, "ed"))) {
                t.xpos = "VBN";
            }

            // "that": determiner vs relativizer vs complementizer.
            if (t.lower == "that") {
                size_t prev = i;
                bool has_prev = i > 0;
                if (has_prev) prev = i - 1;
                const std::string& nx = i + 1 < n ? toks[i + 1].xpos : std::string();
                const std::string nx_lower = i + 1 < n ? toks[i + 1].lower : std::string();
                if (nx == "NN" || nx == "NNS" || nx == "JJ" || nx == "CD" || nx == "PRP$" ||
                    nx == "NNP") {
                    t.xpos = "DT";
                } else if (has_prev && is_noun_tag(toks[prev].xpos)) {
                    t.xpos = "WDT";
                } else if (has_prev && (is_verb_tag(toks[prev].xpos) || toks[prev].xpos == "JJ") &&
                           (nx == "PRP" || nx == "DT" || nx == "NNP" || nx == "EX")) {
                    t.xpos = "IN";
                } else {
                    t.xpos = "DT";
                }
                continue;
            }

            // Clitic auxiliaries.
            if (t.lower == "'d") {
                size_t j = next_content(i);
                t.xpos = (j < n && (has(j, "VBN") || has(j, "VBD"))) ? "VBD" : "MD";
                continue;
            }
            if (t.lower == "'s" && t.xpos == "POS") {
                bool subject_like =
                    i > 0 && (toks[i - 1].xpos == "PRP" || toks[i - 1].xpos == "WP" ||
                              toks[i - 1].xpos == "EX" || toks[i - 1].lower == "that" ||
                              toks[i - 1].lower == "this" || toks[i - 1].lower == "there" ||
                              toks[i - 1].lower == "it");
                size_t j = i + 1;
                if (subject_like && j < n) t.xpos = "VBZ";
                continue;
            }
        }
    }
}

void Tagger::assign_upos(std::vector<Token>& toks) const {
    const size_t n = toks.size();

    auto next_xpos = [&](size_t i) -> std::string {
        return i + 1 < n ? toks[i + 1].xpos : std::string();
    };
    auto next_content_xpos = [&](size_t i) -> std::string {
        size_t j = i + 1;
        while (j < n && (is_adverb_tag(toks[j].xpos) || toks[j].lower == "not" ||
                         toks[j].lower == "n't" || toks[j].xpos == "PRP")) {
            ++j;
        }
        return j < n ? toks[j].xpos : std::string();
    };
    auto nounish_follows = [&](size_t i) {
        const std::string nx = next_xpos(i);
        return nx == "NN" || nx == "NNS" || nx == "NNP" || nx == "NNPS" || nx == "JJ" ||
               nx == "JJR" || nx == "JJS" || nx == "CD" || nx == "DT" || nx == "PRP$";
    };

    for (size_t i = 0; i < n; ++i) {
        Token& t = toks[i];
        const std::string& x = t.xpos;

        if (x == "." || x == "," || x == ":" || x == "''" || x == "``" || x == "-LRB-" ||
            x == "-RRB-" || x == "NFP" || x == "HYPH") {
            t.upos = "PUNCT";
        } else if (x == "$" || x == "#" || x == "SYM") {
            t.upos = "SYM";
        } else if (x == "MD") {
            t.upos = "AUX";
        } else if (is_verb_tag(x)) {
            if (be_forms().count(t.lower)) {
                t.upos = "AUX";
            } else if (have_forms().count(t.lower)) {
                const std::string nc = next_content_xpos(i);
                t.upos = (nc == "VBN") ? "AUX" : "VERB";
            } else if (do_forms().count(t.lower) && t.lower != "done" && t.lower != "doing") {
                const std::string nc = next_content_xpos(i);
                t.upos = (nc == "VB") ? "AUX" : "VERB";
            } else {
                t.upos = "VERB";
            }
        } else if (x == "NN" || x == "NNS") {
            t.upos = "NOUN";
        } else if (x == "NNP" || x == "NNPS") {
            t.upos = "PROPN";
        } else if (x == "JJ" || x == "JJR" || x == "JJS") {
            t.upos = "ADJ";
        } else if (x == "RB" || x == "RBR" || x == "RBS" || x == "WRB") {
            t.upos = (t.lower == "not" || t.lower == "n't") ? "PART" : "ADV";
        } else if (x == "PRP" || x == "PRP$" || x == "WP" || x == "WP$" || x == "EX") {
            t.upos = "PRON";
        } else if (x == "WDT") {
            t.upos = nounish_follows(i) ? "DET" : "PRON";
        } else if (x == "DT" || x == "PDT") {
            t.upos = nounish_follows(i) ? "DET" : "PRON";
        } else if (x == "IN") {
            t.upos = (sconj_words().count(t.lower) || t.lower == "that") ? "SCONJ" : "ADP";
        } else if (x == "TO") {
            t.upos = (next_xpos(i) == "VB" || next_content_xpos(i) == "VB") ? "PART" : "ADP";
        } else if (x == "RP") {
            t.upos = "ADP";
        } else if (x == "POS") {
            t.upos = "PART";
        } else if (x == "CC") {
            t.upos = "CCONJ";
        } else if (x == "CD") {
            t.upos = "NUM";
        } else if (x == "UH") {
            t.upos = "INTJ";
        } else if (x == "FW" || x == "LS" || x == "XX" || x == "ADD" || x == "GW") {
            t.upos = "X";
        } else {
            t.upos = "X";
        }
    }
}

TaggedDoc Tagger::tag(const std::vector<std::vector<std::string>>& sentences,
                      std::string instance_id) const {
    TaggedDoc doc;
    doc.instance_id = std::move(instance_id);
    doc.provenance = Provenance::builtin_tagger;

    for (const auto& sent : sentences) {
        if (sent.empty()) continue;
        Sentence out;
        out.tokens.reserve(sent.size());
        for (size_t i = 0; i < sent.size(); ++i) {
            Token tok;
            tok.form = sent[i];
            tok.lower = text::lower_ascii(sent[i]);

            if (text::is_punct_token(tok.form)) {
                tok.xpos = punct_xpos(tok.form);
            } else if (auto it = lexicon_.find(tok.lower); it != lexicon_.end()) {
                tok.xpos = it->second.front();
                // Capitalized mid-sentence and proper-noun capable: prefer NNP.
                if (i > 0 && capitalized(tok.form) &&
                    std::find(it->second.begin(), it->second.end(), "NNP") != it->second.end()) {
                    tok.xpos = "NNP";
                }
            } else {
                tok.xpos = guess(tok.form, tok.lower, i == 0);
            }
            out.tokens.push_back(std::move(tok));
        }
        patch(out.tokens);
        assign_upos(out.tokens);
        doc.sentences.push_back(std::move(out));
    }
    return doc;
}

TaggedDoc Tagger::annotate_text(std::string_view text_in, std::string instance_id,
                                const SentenceSplitter& splitter) const {
    auto tokens = tokenize(text_in);
    auto sentences = splitter.split(tokens);
    return tag(sentences, std::move(instance_id));
}

} // namespace stylo::annotate
