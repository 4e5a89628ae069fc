#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Core data model: candidates, prompts, binary outcome tensors and the
// success matrices reduced from them, with bit-exact text persistence.
namespace promptvar {

struct UserPrompt {
  std::string id;
  std::string text;  // may be empty for synthetic environments
};

struct SystemPromptCandidate {
  std::string id;
  std::string text;
};

// Thrown by readers on malformed input; the message names the offending
// line/cell.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense N x K matrix of reals, row-major. Used for success probabilities
// (true or estimated) wherever ids are not needed.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;  // rows * cols, row-major

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

  double& at(int r, int c) {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
  double at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
};

// Binary rewards indexed [candidate n][prompt k][sample j]. Immutable by
// convention after construction; validate() checks the declared shape.
struct OutcomeTensor {
  std::vector<std::string> candidates;  // N ids, unique
  std::vector<std::string> prompts;     // K ids, unique
  int samples_per_cell = 0;             // M >= 1
  std::vector<std::uint8_t> values;     // N*K*M entries, each 0 or 1

  int n_candidates() const { return static_cast<int>(candidates.size()); }
  int k_prompts() const { return static_cast<int>(prompts.size()); }

  std::uint8_t at(int n, int k, int j) const {
    return values[(static_cast<std::size_t>(n) * prompts.size() + k) *
                      samples_per_cell +
                  j];
  }
  std::uint8_t& at(int n, int k, int j) {
    return values[(static_cast<std::size_t>(n) * prompts.size() + k) *
                      samples_per_cell +
                  j];
  }
  std::span<const std::uint8_t> cell(int n, int k) const {
    return {values.data() + (static_cast<std::size_t>(n) * prompts.size() + k) *
                                samples_per_cell,
            static_cast<std::size_t>(samples_per_cell)};
  }

  // Throws std::invalid_argument on shape/domain/id violations.
  void validate() const;
};

// Plug-in success estimates p_hat[n][k] with the per-cell sample count
// behind them.
struct SuccessMatrix {
  std::vector<std::string> candidates;
  std::vector<std::string> prompts;
  int m_used = 0;
  std::vector<double> p_hat;  // N*K, row-major

  int n_candidates() const { return static_cast<int>(candidates.size()); }
  int k_prompts() const { return static_cast<int>(prompts.size()); }

  double at(int n, int k) const {
    return p_hat[static_cast<std::size_t>(n) * prompts.size() + k];
  }
  double& at(int n, int k) {
    return p_hat[static_cast<std::size_t>(n) * prompts.size() + k];
  }

  // Mean of each candidate's row, in candidate order.
  std::vector<double> row_means() const;

  void validate() const;
};

// p_hat[n][k] = mean of the cell's M bits; id orders preserved.
SuccessMatrix reduce_outcomes(const OutcomeTensor& t);

// Text table round trip; read(write(t)) == t bit-exactly.
void write_tensor(const OutcomeTensor& t, std::ostream& out);
OutcomeTensor read_tensor(std::istream& in);
void write_matrix(const SuccessMatrix& s, std::ostream& out);
SuccessMatrix read_matrix(std::istream& in);

void save_tensor(const OutcomeTensor& t, const std::filesystem::path& path);
OutcomeTensor load_tensor(const std::filesystem::path& path);
void save_matrix(const SuccessMatrix& s, const std::filesystem::path& path);
SuccessMatrix load_matrix(const std::filesystem::path& path);

// Shortest decimal that parses back to exactly the same double.
std::string format_double(double v);
double parse_double(std::string_view text);

// Ids in the text formats are single tokens: non-empty, no whitespace or
// control characters.
bool valid_id(std::string_view id);

}  // namespace promptvar
