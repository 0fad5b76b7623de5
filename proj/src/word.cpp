#include "etagap/word.hpp"

#include <cctype>
#include <limits>
#include <string>

namespace etagap {

namespace {

class WordParser {
 public:
  WordParser(const Group& g, std::string_view text) : g_(g), text_(text) {}

  Element parse() {
    skip_blanks();
    if (pos_ == text_.size()) error("empty word");
    Element value = term();
    for (;;) {
      skip_blanks();
      if (pos_ == text_.size()) return value;
      if (text_[pos_] != '*') error("expected '*'");
      ++pos_;
      value = g_.multiply_unchecked(value, term());
    }
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse_error,
         "word '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::uint64_t digits() {
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      error("expected digits");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() >> 4)) error("number too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
    }
    return v;
  }

  Element term() {
    skip_blanks();
    if (pos_ == text_.size()) error("expected a generator");
    Element base;
    if (text_[pos_] == 'e') {
      ++pos_;
      base = g_.identity();
    } else if (text_[pos_] == 'g') {
      ++pos_;
      std::size_t at = pos_;
      auto index = digits();
      if (index >= g_.generators().size()) {
        fail(ErrorCode::unknown_generator,
             "word '" + std::string(text_) + "' at offset " + std::to_string(at) + ": generator g" +
                 std::to_string(index) + " does not exist (group has " +
                 std::to_string(g_.generators().size()) + ")");
      }
      base = g_.generators()[index];
    } else {
      error("expected 'e' or a generator name");
    }
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_blanks();
      bool negative = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        negative = text_[pos_] == '-';
        ++pos_;
      }
      auto k = static_cast<std::int64_t>(digits());
      base = g_.power(base, negative ? -k : k);
    }
    return base;
  }

  const Group& g_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element_word(const Group& g, std::string_view word) {
  return WordParser(g, word).parse();
}

}  // namespace etagap
