#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace centilink {

// Anything wrong with input data (corpus, dictionary files, datasets).
// The CLI maps these to exit code 2; usage errors exit with 1.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CorpusParseError : DataError {
  CorpusParseError(const std::string& what, std::size_t byte_offset, std::size_t record_index)
      : DataError(what), byte_offset(byte_offset), record_index(record_index) {}

  std::size_t byte_offset = 0;
  std::size_t record_index = 0;
};

struct TsvParseError : DataError {
  TsvParseError(const std::string& what, std::size_t line_number)
      : DataError(what), line_number(line_number) {}

  std::size_t line_number = 0;
};

}  // namespace centilink
