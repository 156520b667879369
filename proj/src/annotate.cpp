#include "stylo/annotate.hpp"

#include "stylo/data_paths.hpp"
#include "stylo/errors.hpp"
#include "stylo/text.hpp"

#include <algorithm>
#include <fstream>

namespace stylo::annotate {

const std::vector<std::string>& upos_inventory() {
    static const std::vector<std::string> tags{
        "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
        "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};
    return tags;
}

bool is_valid_upos(std::string_view tag) {
    const auto& inv = upos_inventory();
    return std::find(inv.begin(), inv.end(), tag) != inv.end();
}

size_t TaggedDoc::token_count() const {
    size_t n = 0;
    for (const auto& s : sentences) n += s.tokens.size();
    return n;
}

bool TaggedDoc::has_xpos() const {
    if (sentences.empty()) return false;
    for (const auto& s : sentences)
        for (const auto& t : s.tokens)
            if (t.xpos.empty()) return false;
    return true;
}

bool TaggedDoc::has_heads() const {
    if (sentences.empty()) return false;
    for (const auto& s : sentences)
        for (const auto& t : s.tokens)
            if (!t.head) return false;
    return true;
}

bool TaggedDoc::has_entities() const {
    for (const auto& s : sentences)
        for (const auto& t : s.tokens)
            if (t.entity) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Tokenization
// ---------------------------------------------------------------------------

namespace {

struct Cp {
    char32_t cp;
    size_t byte_begin;
    size_t byte_end;
};

std::vector<Cp> decode_all(std::string_view s, size_t base) {
    std::vector<Cp> out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        size_t start = i;
        char32_t cp = text::decode_utf8(s, i);
        out.push_back({cp, base + start, base + i});
    }
    return out;
}

char32_t lower_cp(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp - 'A' + 'a';
    if (cp == 0x2019) return '\''; // curly apostrophe
    return cp;
}

bool is_apostrophe(char32_t cp) {
    return cp == '\'' || cp == 0x2019;
}

// Clitic suffixes checked against the lowered code points of a chunk.
// Returns the code-point index where the clitic starts, or npos.
size_t clitic_split_point(const std::vector<Cp>& cps) {
    const size_t n = cps.size();
    auto low = [&](size_t i) { return lower_cp(cps[i].cp); };

    // n't — keep at least one character in front ("n't" itself stays whole).
    if (n > 3 && low(n - 3) == 'n' && is_apostrophe(cps[n - 2].cp) && low(n - 1) == 't') {
        return n - 3;
    }
    // 're 've 'll
    if (n > 3 && is_apostrophe(cps[n - 3].cp)) {
        char32_t a = low(n - 2), b = low(n - 1);
        if ((a == 'r' && b == 'e') || (a == 'v' && b == 'e') || (a == 'l' && b == 'l')) {
            return n - 3;
        }
    }
    // 's 'd 'm
    if (n > 2 && is_apostrophe(cps[n - 2].cp)) {
        char32_t a = low(n - 1);
        if (a == 's' || a == 'd' || a == 'm') {
            return n - 2;
        }
    }
    return std::string::npos;
}

void emit(std::vector<Span>& out, std::string_view full, const std::vector<Cp>& cps,
          size_t cp_begin, size_t cp_end) {
    if (cp_begin >= cp_end) return;
    size_t b = cps[cp_begin].byte_begin;
    size_t e = cps[cp_end - 1].byte_end;
    out.push_back({std::string(full.substr(b, e - b)), b, e});
}

// Splits one whitespace-free chunk into tokens: leading punctuation runs,
// the core (with clitics peeled from the right), trailing punctuation runs.
void split_chunk(std::vector<Span>& out, std::string_view full, std::string_view chunk,
                 size_t base) {
    std::vector<Cp> cps = decode_all(chunk, base);

    size_t lo = 0, hi = cps.size();

    // Leading punctuation: each maximal run of one character is one token.
    std::vector<std::pair<size_t, size_t>> leading;
    while (lo < hi && text::is_punct(cps[lo].cp)) {
        size_t run = lo + 1;
        while (run < hi && cps[run].cp == cps[lo].cp) ++run;
        // Don't strip an apostrophe that starts a clitic-only chunk ('s, 'll).
        if (is_apostrophe(cps[lo].cp) && run < hi && !text::is_punct(cps[run].cp)) break;
        leading.emplace_back(lo, run);
        lo = run;
    }

    // Trailing punctuation runs (collected in reverse).
    std::vector<std::pair<size_t, size_t>> trailing;
    while (hi > lo && text::is_punct(cps[hi - 1].cp)) {
        size_t run = hi - 1;
        while (run > lo && cps[run - 1].cp == cps[hi - 1].cp) --run;
        // An apostrophe glued to the core may open a clitic; leave it.
        if (is_apostrophe(cps[hi - 1].cp) && run > lo) break;
        trailing.emplace_back(run, hi);
        hi = run;
    }

    for (auto [b, e] : leading) emit(out, full, cps, b, e);

    // Core with clitic peeling ("she'd've" -> she 'd 've).
    if (lo < hi) {
        std::vector<std::pair<size_t, size_t>> clitics;
        std::vector<Cp> core(cps.begin() + lo, cps.begin() + hi);
        while (true) {
            size_t split = clitic_split_point(core);
            if (split == std::string::npos) break;
            clitics.emplace_back(lo + split, lo + core.size());
            core.resize(split);
        }
        emit(out, full, cps, lo, lo + core.size());
        for (auto it = clitics.rbegin(); it != clitics.rend(); ++it) {
            emit(out, full, cps, it->first, it->second);
        }
    }

    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
        emit(out, full, cps, it->first, it->second);
    }
}

} // namespace

std::vector<Span> tokenize_spans(std::string_view text_in) {
    std::vector<Span> out;
    size_t i = 0;
    while (i < text_in.size()) {
        while (i < text_in.size() && text::is_ascii_space(text_in[i])) ++i;
        size_t start = i;
        while (i < text_in.size() && !text::is_ascii_space(text_in[i])) ++i;
        if (i > start) {
            split_chunk(out, text_in, text_in.substr(start, i - start), start);
        }
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text_in) {
    std::vector<std::string> out;
    for (auto& span : tokenize_spans(text_in)) {
        out.push_back(std::move(span.form));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sentence segmentation
// ---------------------------------------------------------------------------

SentenceSplitter::SentenceSplitter(std::unordered_set<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

SentenceSplitter SentenceSplitter::load_default() {
    auto path = DataPaths::file("abbreviations.txt");
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open abbreviation list: " + path.string());

    std::unordered_set<std::string> abbrevs;
    std::string line;
    while (std::getline(in, line)) {
        auto t = text::trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::string a = text::lower_ascii(t);
        if (!a.empty() && a.back() == '.') a.pop_back();
        abbrevs.insert(std::move(a));
    }
    return SentenceSplitter(std::move(abbrevs));
}

namespace {

bool is_terminator(std::string_view form) {
    if (form == "…") return true; // …
    if (form.empty()) return false;
    for (char c : form) {
        if (c != '.' && c != '!' && c != '?') return false;
    }
    return true;
}

bool is_closing(std::string_view form) {
    return form == "\"" || form == "'" || form == ")" || form == "]" || form == "}" ||
           form == "’" || form == "”" || form == "»";
}

bool is_single_capital(std::string_view form) {
    return form.size() == 1 && form[0] >= 'A' && form[0] <= 'Z';
}

} // namespace

std::vector<std::vector<std::string>> SentenceSplitter::split(
    const std::vector<std::string>& tokens) const {
    std::vector<std::vector<std::string>> sentences;
    std::vector<std::string> current;

    for (size_t i = 0; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        current.push_back(tok);
        if (!is_terminator(tok)) continue;

        // A bare period after an abbreviation or an initial does not close
        // the sentence.
        if (tok == "." && !current.empty() && current.size() >= 2) {
            const std::string& prev = current[current.size() - 2];
            if (is_single_capital(prev)) continue;
            std::string low = text::lower_ascii(prev);
            if (abbreviations_.count(low)) continue;
        }

        // Pull any closing quotes/brackets into this sentence.
        while (i + 1 < tokens.size() && is_closing(tokens[i + 1])) {
            current.push_back(tokens[++i]);
        }
        sentences.push_back(std::move(current));
        current.clear();
    }

    if (!current.empty()) sentences.push_back(std::move(current));
    return sentences;
}

// ---------------------------------------------------------------------------
// Syllables
// ---------------------------------------------------------------------------

namespace {

bool is_vowel_cp(char32_t cp) {
    switch (cp) {
        case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
            return true;
        default:
            break;
    }
    // Accented Latin-1 vowels.
    if ((cp >= 0xE0 && cp <= 0xE6) || (cp >= 0xE8 && cp <= 0xEF) ||
        (cp >= 0xF2 && cp <= 0xF6) || (cp >= 0xF9 && cp <= 0xFC)) {
        return true;
    }
    return false;
}

} // namespace

int count_syllables(std::string_view word) {
    // Letters only, lowercased.
    std::vector<char32_t> w;
    for (size_t i = 0; i < word.size();) {
        char32_t cp = text::decode_utf8(word, i);
        cp = lower_cp(cp);
        if (text::is_letter(cp)) w.push_back(cp);
    }
    if (w.empty()) return 1;

    const size_t n = w.size();
    auto vowel = [&](size_t i) { return is_vowel_cp(w[i]); };

    int groups = 0;
    for (size_t i = 0; i < n; ++i) {
        if (vowel(i) && (i == 0 || !vowel(i - 1))) ++groups;
    }

    // Silent final e: "cake" -> 1, but consonant+"le" is a syllable
    // ("table" -> 2) and a lone vowel group stays ("the" -> 1).
    if (n >= 2 && w[n - 1] == 'e' && !vowel(n - 2)) {
        bool cons_le = n >= 3 && w[n - 1] == 'e' && w[n - 2] == 'l' && !vowel(n - 3);
        if (!cons_le && groups > 1) --groups;
    }

    // Silent -ed: "walked" -> 1, but -ted/-ded keep it ("wanted" -> 2).
    if (n >= 3 && w[n - 2] == 'e' && w[n - 1] == 'd' && !vowel(n - 3) &&
        w[n - 3] != 't' && w[n - 3] != 'd' && groups > 1) {
        --groups;
    }

    // Silent -es: "makes" -> 1 unless the stem ends in a sibilant
    // ("boxes", "faces", "wishes" keep the syllable), and consonant+"les"
    // is pronounced ("tables" -> 2).
    if (n >= 3 && w[n - 2] == 'e' && w[n - 1] == 's' && !vowel(n - 3) && groups > 1) {
        char32_t before = w[n - 3];
        bool sibilant = before == 's' || before == 'x' || before == 'z' || before == 'c' ||
                        before == 'g' ||
                        (n >= 4 && w[n - 3] == 'h' && (w[n - 4] == 'c' || w[n - 4] == 's'));
        bool cons_les = before == 'l' && n >= 4 && !vowel(n - 4);
        if (!sibilant && !cons_les) --groups;
    }

    // Vowel hiatus the grouping misses: final -ia ("media") and -iou- not
    // fused by c/t/g/x ("curious" but not "delicious").
    if (n >= 2 && w[n - 2] == 'i' && w[n - 1] == 'a') ++groups;
    for (size_t i = 0; i + 2 < n; ++i) {
        if (w[i] == 'i' && w[i + 1] == 'o' && w[i + 2] == 'u') {
            char32_t before = i > 0 ? w[i - 1] : 0;
            if (before != 'c' && before != 't' && before != 'g' && before != 'x') ++groups;
        }
    }

    return groups < 1 ? 1 : groups;
}

} // namespace stylo::annotate
