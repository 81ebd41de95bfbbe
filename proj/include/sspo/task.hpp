#pragma once

#include <span>
#include <string>
#include <vector>

namespace sspo {

enum class TaskKind { sequence_copy, modular_arithmetic, pattern_completion };

/// Synthetic verifiable-reward tasks. Each query id maps to one exact target
/// token sequence; the reward is 1.0 on an exact match and 0.0 otherwise.
///
/// The vocabulary reserves two ids: separator_id (a "line break") and eos_id.
/// Targets deliberately contain separators after every line_length content
/// tokens so that segment-level machinery sees more than one segment; a task
/// whose answers never contain separators would reduce segment ratios to
/// response ratios without anyone noticing.
struct TaskSpec {
  TaskKind kind = TaskKind::sequence_copy;
  int query_count = 4;
  int target_length = 2;  // content tokens, excluding separators
  int line_length = 1;    // content tokens per line
  int vocab_size = 4;
  int separator_id = -1;         // -1: vocab_size - 2
  int eos_id = -1;               // -1: vocab_size - 1
  int max_response_length = 0;   // 0: exactly the target token count

  int resolved_separator_id() const {
    return separator_id >= 0 ? separator_id : vocab_size - 2;
  }
  int resolved_eos_id() const {
    return eos_id >= 0 ? eos_id : vocab_size - 1;
  }
  int content_alphabet() const;

  /// Throws std::invalid_argument when the fields are inconsistent.
  void validate() const;

  /// The exact answer sequence for a query: content tokens with a separator
  /// closing every line. Never contains eos.
  std::vector<int> target_tokens(int query) const;

  int resolved_max_response_length() const;

  /// 1.0 iff the response, after stripping a single trailing eos, equals
  /// target_tokens(query) exactly. Empty responses score 0.
  double reward(int query, std::span<const int> response_tokens) const;
};

const char* to_string(TaskKind kind);
TaskKind task_kind_from_string(const std::string& name);

}  // namespace sspo
