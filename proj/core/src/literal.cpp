#include "prefixgroup/literal.hpp"

#include <cctype>
#include <vector>

#include "prefixgroup/error.hpp"

namespace prefixgroup {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, int arity) : text_(text), arity_(arity) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) {
      fail("expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  Word word() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == 'e') {
      ++pos_;
      return Word();
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] - '0' >= arity_) {
        fail("letter " + std::string(1, text_[pos_]) + " exceeds arity " +
             std::to_string(arity_));
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected a word");
    return Word(std::string(text_.substr(start, pos_ - start)));
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string &what) const { throw ParseError(pos_, what); }
  std::size_t position() const noexcept { return pos_; }

 private:
  std::string_view text_;
  int arity_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, int arity) {
  check_arity(arity);
  Cursor cur(text, arity);
  Word w = cur.word();
  cur.finish();
  return w;
}

PrefixMap parse_element(std::string_view text, int arity) {
  check_arity(arity);
  Cursor cur(text, arity);
  std::vector<WordPair> pairs;
  cur.expect("{");
  do {
    Word d = cur.word();
    cur.expect("->");
    Word r = cur.word();
    pairs.push_back({std::move(d), std::move(r)});
    if (!cur.peek(',')) break;
    cur.expect(",");
  } while (true);
  cur.expect("}");
  cur.finish();
  try {
    return PrefixMap::reduce(std::move(pairs), arity);
  } catch (const Error &e) {
    throw ParseError(0, std::string("incomplete code: ") + e.what());
  }
}

ClopenSet parse_clopen(std::string_view text, int arity) {
  check_arity(arity);
  Cursor cur(text, arity);
  std::vector<Word> words;
  cur.expect("[");
  if (!cur.peek(']')) {
    do {
      words.push_back(cur.word());
      if (!cur.peek(',')) break;
      cur.expect(",");
    } while (true);
  }
  cur.expect("]");
  cur.finish();
  return ClopenSet::canonicalize(words, arity);
}

}  // namespace prefixgroup
