#include "sspo/task.hpp"

#include <algorithm>
#include <stdexcept>

namespace sspo {

int TaskSpec::content_alphabet() const {
  int n = vocab_size;
  if (resolved_separator_id() < vocab_size) --n;
  if (resolved_eos_id() < vocab_size && resolved_eos_id() != resolved_separator_id()) --n;
  return n;
}

void TaskSpec::validate() const {
  if (vocab_size < 4) {
    throw std::invalid_argument("task: vocab_size must be >= 4");
  }
  if (query_count < 1) {
    throw std::invalid_argument("task: query_count must be >= 1");
  }
  if (target_length < 1 || line_length < 1) {
    throw std::invalid_argument("task: target_length and line_length must be >= 1");
  }
  const int sep = resolved_separator_id();
  const int eos = resolved_eos_id();
  if (sep < 0 || sep >= vocab_size || eos < 0 || eos >= vocab_size || sep == eos) {
    throw std::invalid_argument("task: separator_id and eos_id must be distinct ids below vocab_size");
  }
  if (content_alphabet() < 2) {
    throw std::invalid_argument("task: need at least 2 content tokens");
  }
}

namespace {

// Content ids are the vocabulary minus the two reserved ids, in order.
std::vector<int> content_ids(const TaskSpec& task) {
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(task.content_alphabet()));
  for (int v = 0; v < task.vocab_size; ++v) {
    if (v != task.resolved_separator_id() && v != task.resolved_eos_id()) {
      ids.push_back(v);
    }
  }
  return ids;
}

int content_symbol(const TaskSpec& task, int query, int j) {
  const int c = task.content_alphabet();
  switch (task.kind) {
    case TaskKind::sequence_copy:
      return (query + j) % c;
    case TaskKind::pattern_completion: {
      // Arithmetic progression with a query-dependent stride.
      const int stride = query % (c - 1) + 1;
      return (stride * (j + 1)) % c;
    }
    case TaskKind::modular_arithmetic: {
      const int a = query % c;
      const int b = (query / c) % c;
      if (j == 0) return (a + b) % c;
      if (j == 1) return (a * b) % c;
      // Continue with a pairwise-sum recurrence so longer targets exist.
      int prev2 = (a + b) % c;
      int prev1 = (a * b) % c;
      for (int k = 2; k <= j; ++k) {
        const int next = (prev1 + prev2) % c;
        prev2 = prev1;
        prev1 = next;
      }
      return prev1;
    }
  }
  return 0;
}

}  // namespace

std::vector<int> TaskSpec::target_tokens(int query) const {
  validate();
  const std::vector<int> alphabet = content_ids(*this);
  std::vector<int> target;
  target.reserve(static_cast<std::size_t>(target_length + target_length / line_length + 1));
  for (int j = 0; j < target_length; ++j) {
    target.push_back(alphabet[static_cast<std::size_t>(content_symbol(*this, query, j))]);
    const bool line_full = (j + 1) % line_length == 0;
    if (line_full || j + 1 == target_length) {
      target.push_back(resolved_separator_id());
    }
  }
  return target;
}

int TaskSpec::resolved_max_response_length() const {
  if (max_response_length > 0) return max_response_length;
  return static_cast<int>(target_tokens(0).size());
}

double TaskSpec::reward(int query, std::span<const int> response_tokens) const {
  if (response_tokens.empty()) return 0.0;
  std::span<const int> answer = response_tokens;
  if (answer.back() == resolved_eos_id()) {
    answer = answer.first(answer.size() - 1);
  }
  const std::vector<int> target = target_tokens(query);
  return std::equal(answer.begin(), answer.end(), target.begin(), target.end())
             ? 1.0
             : 0.0;
}

const char* to_string(TaskKind kind) {
  switch (kind) {
    case TaskKind::sequence_copy: return "sequence_copy";
    case TaskKind::modular_arithmetic: return "modular_arithmetic";
    case TaskKind::pattern_completion: return "pattern_completion";
  }
  return "?";
}

TaskKind task_kind_from_string(const std::string& name) {
  if (name == "sequence_copy") return TaskKind::sequence_copy;
  if (name == "modular_arithmetic") return TaskKind::modular_arithmetic;
  if (name == "pattern_completion") return TaskKind::pattern_completion;
  throw std::invalid_argument("unknown task kind: " + name);
}

}  // namespace sspo
