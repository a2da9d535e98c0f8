#ifndef HILBCAT_DSL_ERRORS_HPP
#define HILBCAT_DSL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbcat::dsl {

/// Anything wrong with user input: files, formulas, command options.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public input_error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& what)
      : input_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Dimension mismatches, duplicate or unknown names.
class model_error : public input_error {
 public:
  using input_error::input_error;
};

class type_error : public input_error {
 public:
  using input_error::input_error;
};

}  // namespace hilbcat::dsl

#endif  // HILBCAT_DSL_ERRORS_HPP
