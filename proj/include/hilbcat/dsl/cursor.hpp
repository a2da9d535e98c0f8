#ifndef HILBCAT_DSL_CURSOR_HPP
#define HILBCAT_DSL_CURSOR_HPP

#include <hilbcat/dsl/errors.hpp>
#include <hilbcat/matrix.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace hilbcat::dsl {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

/// Character cursor over one line of input; columns are 1-based.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  std::size_t column() const { return pos_ + 1; }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool peek_is(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }

  [[noreturn]] void fail(const std::string& what) const { throw parse_error(line_, column(), what); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& what) const { throw parse_error(line_, col, what); }

  void expect(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) != s) fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }
  bool accept(std::string_view s) {
    if (!peek_is(s)) return false;
    pos_ += s.size();
    return true;
  }

  std::string ident(const char* what = "a name") {
    skip_ws();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail(std::string("expected ") + what);
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  /// Accepts `word` only as a whole identifier.
  bool accept_keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t after = pos_ + word.size();
    if (after < text_.size() && is_ident_char(text_[after])) return false;
    pos_ = after;
    return true;
  }

  std::size_t natural() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a dimension");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  /// Scalar text up to the next ',', ')' or ']'.
  Scalar scalar() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' && text_[pos_] != ']') ++pos_;
    try {
      return Scalar::parse(text_.substr(start, pos_ - start));
    } catch (const scalar_syntax_error& e) {
      fail_at(start + 1, e.what());
    }
  }

  /// `[[a, b], [c, d]]`; `[]` has zero rows and `default_cols` columns.
  Matrix matrix(std::size_t default_cols) {
    expect("[");
    std::vector<std::vector<Scalar>> rows;
    if (!accept("]")) {
      do {
        expect("[");
        std::vector<Scalar> row;
        if (!accept("]")) {
          do {
            row.push_back(scalar());
          } while (accept(","));
          expect("]");
        }
        rows.push_back(std::move(row));
      } while (accept(","));
      expect("]");
    }
    if (rows.empty()) return Matrix(0, default_cols);
    std::size_t cols = rows.front().size();
    std::vector<Scalar> entries;
    for (const auto& r : rows) {
      if (r.size() != cols) fail("ragged matrix: rows of different lengths");
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), cols, std::move(entries));
  }

  /// `(a, b, c)` as a column.
  Matrix vector() {
    expect("(");
    std::vector<Scalar> entries;
    do {
      entries.push_back(scalar());
    } while (accept(","));
    expect(")");
    return Matrix::column(entries);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace hilbcat::dsl

#endif  // HILBCAT_DSL_CURSOR_HPP
