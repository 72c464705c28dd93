#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kintrace {

/// Identifier of a person inside one pedigree. Ids are positive; the value 0
/// never appears (unknown parents are modelled with std::optional instead).
class PersonId {
 public:
  constexpr explicit PersonId(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr auto operator<=>(const PersonId&) const = default;

 private:
  std::uint32_t value_;
};

enum class Sex : std::uint8_t { Male, Female };

inline char sex_code(Sex s) { return s == Sex::Male ? 'M' : 'F'; }

using Date = std::chrono::year_month_day;

struct Person {
  PersonId id{1};
  std::string first_name;
  std::string last_name;
  Sex sex = Sex::Male;
  Date birth_date{};
  std::optional<PersonId> father_id;
  std::optional<PersonId> mother_id;
  // Ground-truth family label. Persisted for external correctness checks;
  // never consulted by any search.
  std::optional<std::uint32_t> family_check_id;

  bool operator==(const Person&) const = default;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateIdError : Error {
  explicit DuplicateIdError(PersonId id);
  PersonId id;
};

struct DanglingParentError : Error {
  DanglingParentError(PersonId person, PersonId parent);
  PersonId person;
  PersonId parent;
};

struct ParentSexMismatchError : Error {
  ParentSexMismatchError(PersonId person, PersonId parent);
  PersonId person;
  PersonId parent;
};

struct CycleDetectedError : Error {
  explicit CycleDetectedError(std::vector<PersonId> cycle);
  std::vector<PersonId> cycle;
};

struct UnknownPersonError : Error {
  explicit UnknownPersonError(PersonId id);
  PersonId id;
};

struct ParseError : Error {
  ParseError(std::size_t line, std::size_t column, const std::string& reason);
  std::size_t line;    // 1-based line number
  std::size_t column;  // 1-based field index
};

struct IoError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct InsufficientPopulationError : Error {
  using Error::Error;
};

}  // namespace kintrace

template <>
struct std::hash<kintrace::PersonId> {
  std::size_t operator()(const kintrace::PersonId& id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value());
  }
};

namespace kintrace {

class PedigreeGraph;

/// Mutable staging area for a pedigree. Parent references may point at
/// persons added later; everything is validated in finalize().
class PedigreeBuilder {
 public:
  void add_person(Person person);

  /// Validates parent resolution, parent sexes and acyclicity, builds the
  /// child index, and produces the immutable graph. The builder is left
  /// empty.
  PedigreeGraph finalize() &&;

  std::size_t size() const { return order_.size(); }

 private:
  std::unordered_map<PersonId, Person> persons_;
  std::vector<PersonId> order_;
};

/// Immutable pedigree: persons plus parent/child adjacency. All query
/// methods are const and safe to call from any number of threads at once.
class PedigreeGraph {
 public:
  PedigreeGraph() = default;

  bool contains(PersonId id) const { return persons_.count(id) != 0; }
  std::size_t size() const { return order_.size(); }

  const Person& person(PersonId id) const;

  /// (father, mother) as stored; either may be absent.
  std::pair<std::optional<PersonId>, std::optional<PersonId>> parents_of(
      PersonId id) const;

  /// Children in insertion order of the child records.
  const std::vector<PersonId>& children_of(PersonId id) const;

  /// All person ids in insertion order.
  const std::vector<PersonId>& ids() const { return order_; }

  bool operator==(const PedigreeGraph& other) const;

 private:
  friend class PedigreeBuilder;

  std::unordered_map<PersonId, Person> persons_;
  std::unordered_map<PersonId, std::vector<PersonId>> children_;
  std::vector<PersonId> order_;
  static const std::vector<PersonId> kNoChildren;
};

/// CSV persistence. Format (header mandatory, UTF-8, comma separated):
///   person_id,first_name,last_name,sex,birth_date,father_id,mother_id,family_check_id
/// sex is M or F, birth_date is ISO 8601 (YYYY-MM-DD), the last three fields
/// may be empty. Round trips are lossless: load_csv(save_csv(g)) == g.
PedigreeGraph load_csv(const std::string& path);
void save_csv(const PedigreeGraph& graph, const std::string& path);

std::string format_date(const Date& date);
Date parse_date(const std::string& text, std::size_t line, std::size_t column);

}  // namespace kintrace
