#pragma once

// Execution semantics: threads extracted from instruction sequences, Boolean
// register services, service families with composition and encapsulation,
// and the abstracting-use and apply operators. run_positional is the fast
// program-counter interpreter; the thread route is kept as its oracle.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "boolreg/isa.hpp"

namespace boolreg {

enum class Reply : std::uint8_t { False, True, Div };

/// A Boolean register service BR^M_b, or the empty service that processes
/// nothing.
class ServiceState {
 public:
  static ServiceState empty() { return ServiceState(); }
  static ServiceState reg(bool content, MethodSet methods) {
    return ServiceState(content, methods);
  }

  bool is_empty() const { return empty_; }
  bool content() const { return content_; }
  MethodSet methods() const { return methods_; }

  friend bool operator==(const ServiceState&, const ServiceState&) = default;

 private:
  ServiceState() = default;
  ServiceState(bool content, MethodSet methods)
      : empty_(false), content_(content), methods_(methods) {}

  bool empty_ = true;
  bool content_ = false;
  MethodSet methods_;
};

/// Reply and successor state for processing one method.
std::pair<Reply, ServiceState> service_step(const ServiceState& s, Method m);

/// Finite map from foci to services.
class ServiceFamily {
 public:
  ServiceFamily() = default;

  static ServiceFamily singleton(const Focus& f, ServiceState s);

  const std::map<Focus, ServiceState>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  const ServiceState* find(const Focus& f) const;
  bool contains(const Focus& f) const { return find(f) != nullptr; }

  /// Replaces the service at an existing focus.
  ServiceFamily with(const Focus& f, ServiceState s) const;

  friend bool operator==(const ServiceFamily&, const ServiceFamily&) = default;

 private:
  std::map<Focus, ServiceState> entries_;
};

/// u (+) v. Services named in both collapse to the empty service.
ServiceFamily family_compose(const ServiceFamily& u, const ServiceFamily& v);

/// Removes every service whose focus is in `foci`.
ServiceFamily encapsulate(const std::set<Focus>& foci, const ServiceFamily& u);

struct BasicAction {
  Focus focus;
  Method method;
  friend bool operator==(const BasicAction&, const BasicAction&) = default;
};

/// Finite thread: S, D, or x <f.m> y. Nodes are immutable and may be shared,
/// so a thread is a DAG whose unfolding is the logical tree.
class Thread {
 public:
  enum class Kind : std::uint8_t { Stop, DeadEnd, Post };

  static Thread stop();
  static Thread dead_end();
  static Thread post(BasicAction action, Thread then_branch, Thread else_branch);

  Kind kind() const { return node_->kind; }
  bool is_stop() const { return kind() == Kind::Stop; }
  bool is_dead_end() const { return kind() == Kind::DeadEnd; }
  const BasicAction& action() const { return *node_->action; }
  Thread then_branch() const { return Thread(node_->then_branch); }
  Thread else_branch() const { return Thread(node_->else_branch); }
  /// Identity of the shared node; equal ids imply equal threads.
  const void* id() const { return node_.get(); }

  /// Depth of the logical tree (S and D have depth 0).
  std::size_t depth() const;
  /// S, D, or (x <f.m> y) text.
  std::string to_string() const;

  friend bool operator==(const Thread& a, const Thread& b);

 private:
  struct Node {
    Kind kind;
    std::optional<BasicAction> action;
    std::shared_ptr<const Node> then_branch;
    std::shared_ptr<const Node> else_branch;
  };
  explicit Thread(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// |X|. Shares the sub-thread of each position, so the result is built in
/// time linear in the sequence length.
Thread thread_extract(const InstructionSeq& seq);

/// t // u
Thread use(const Thread& t, const ServiceFamily& u);
/// t . u
ServiceFamily apply(const Thread& t, const ServiceFamily& u);

enum class Termination : std::uint8_t {
  Terminated,
  Deadlocked,
  /// An action named a focus that has no service in the family; use keeps
  /// such actions, so the run cannot be reduced to S or D.
  Suspended,
};

struct RunResult {
  Termination termination;
  /// Final family; the empty family unless terminated.
  ServiceFamily family;
  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Program-counter interpretation of `seq` against `family`.
RunResult run_positional(const InstructionSeq& seq, const ServiceFamily& family);

/// The RunResult the thread route predicts: derived from use and apply of
/// the extracted thread.
RunResult run_axiomatic(const InstructionSeq& seq, const ServiceFamily& family);

}  // namespace boolreg
