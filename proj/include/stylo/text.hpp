#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Low-level text helpers shared across the toolkit. All functions operate on
// UTF-8 bytes; code-point-aware routines decode on the fly and treat invalid
// sequences as single opaque characters.

namespace stylo::text {

inline bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Decodes one UTF-8 code point starting at `i`; advances `i` past it.
// Invalid bytes decode as themselves (one byte each).
char32_t decode_utf8(std::string_view s, size_t& i);

// Number of code points in a UTF-8 string.
size_t codepoint_count(std::string_view s);

// Letters: ASCII A-Z a-z plus Latin-1 Supplement and Latin Extended-A letter
// ranges. This is the pinned definition used by the length profile; it is
// deliberately explicit rather than locale-dependent.
bool is_letter(char32_t cp);

bool is_digit(char32_t cp);

// Punctuation / symbol code points recognised by the tokenizer: ASCII
// punctuation plus common typographic marks (curly quotes, dashes, ellipsis).
bool is_punct(char32_t cp);

// True when every code point of the token is punctuation.
bool is_punct_token(std::string_view tok);

// ASCII lowercasing; non-ASCII bytes pass through unchanged except curly
// apostrophe U+2019, which normalizes to ' so clitic lists match both forms.
std::string lower_ascii(std::string_view s);

// Maximal runs of non-whitespace characters.
int count_words(std::string_view s);

// Split into maximal non-whitespace runs.
std::vector<std::string_view> whitespace_words(std::string_view s);

std::string_view trim(std::string_view s);

bool ends_with(std::string_view s, std::string_view suffix);
bool starts_with(std::string_view s, std::string_view prefix);

// Splits on a single-character delimiter; keeps empty fields.
std::vector<std::string_view> split(std::string_view s, char delim);

} // namespace stylo::text
