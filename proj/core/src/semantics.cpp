#include "boolreg/semantics.hpp"

#include <set>
#include <unordered_map>
#include <vector>

namespace boolreg {

std::pair<Reply, ServiceState> service_step(const ServiceState& s, Method m) {
  if (s.is_empty() || !s.methods().contains(m)) {
    return {Reply::Div, ServiceState::empty()};
  }
  const bool reply = apply_fn(m.reply, s.content());
  return {reply ? Reply::True : Reply::False,
          ServiceState::reg(apply_fn(m.transform, s.content()), s.methods())};
}

ServiceFamily ServiceFamily::singleton(const Focus& f, ServiceState s) {
  ServiceFamily out;
  out.entries_.emplace(f, s);
  return out;
}

const ServiceState* ServiceFamily::find(const Focus& f) const {
  auto it = entries_.find(f);
  return it == entries_.end() ? nullptr : &it->second;
}

ServiceFamily ServiceFamily::with(const Focus& f, ServiceState s) const {
  ServiceFamily out = *this;
  out.entries_.insert_or_assign(f, s);
  return out;
}

ServiceFamily family_compose(const ServiceFamily& u, const ServiceFamily& v) {
  ServiceFamily out = u;
  for (const auto& [focus, state] : v.entries()) {
    out = u.contains(focus) ? out.with(focus, ServiceState::empty())
                            : out.with(focus, state);
  }
  return out;
}

ServiceFamily encapsulate(const std::set<Focus>& foci, const ServiceFamily& u) {
  ServiceFamily out;
  for (const auto& [focus, state] : u.entries()) {
    if (!foci.contains(focus)) {
      out = family_compose(out, ServiceFamily::singleton(focus, state));
    }
  }
  return out;
}

Thread Thread::stop() {
  static const Thread s(std::make_shared<const Node>(Node{Kind::Stop, {}, {}, {}}));
  return s;
}

Thread Thread::dead_end() {
  static const Thread d(
      std::make_shared<const Node>(Node{Kind::DeadEnd, {}, {}, {}}));
  return d;
}

Thread Thread::post(BasicAction action, Thread then_branch, Thread else_branch) {
  return Thread(std::make_shared<const Node>(
      Node{Kind::Post, std::move(action), std::move(then_branch.node_),
           std::move(else_branch.node_)}));
}

std::size_t Thread::depth() const {
  std::unordered_map<const void*, std::size_t> memo;
  auto go = [&](auto&& self, const Thread& t) -> std::size_t {
    if (t.kind() != Kind::Post) return 0;
    if (auto it = memo.find(t.id()); it != memo.end()) return it->second;
    const std::size_t d =
        1 + std::max(self(self, t.then_branch()), self(self, t.else_branch()));
    memo.emplace(t.id(), d);
    return d;
  };
  return go(go, *this);
}

std::string Thread::to_string() const {
  switch (kind()) {
    case Kind::Stop: return "S";
    case Kind::DeadEnd: return "D";
    case Kind::Post: break;
  }
  return "(" + then_branch().to_string() + " <" + action().focus.name() + "." +
         action().method.code() + "> " + else_branch().to_string() + ")";
}

bool operator==(const Thread& a, const Thread& b) {
  std::set<std::pair<const void*, const void*>> known_equal;
  auto go = [&](auto&& self, const Thread& x, const Thread& y) -> bool {
    if (x.id() == y.id()) return true;
    if (x.kind() != y.kind()) return false;
    if (x.kind() != Thread::Kind::Post) return true;
    if (known_equal.contains({x.id(), y.id()})) return true;
    if (!(x.action() == y.action())) return false;
    if (!self(self, x.then_branch(), y.then_branch()) ||
        !self(self, x.else_branch(), y.else_branch())) {
      return false;
    }
    known_equal.insert({x.id(), y.id()});
    return true;
  };
  return go(go, a, b);
}

Thread thread_extract(const InstructionSeq& seq) {
  const std::size_t n = seq.size();
  // from[i] = |u_i ; ... ; u_n|, filled back to front.
  std::vector<std::optional<Thread>> from(n);

  // |#label ; u_{pos+1} ; ... ; u_n|, unfolded one rule at a time:
  //   |#l| = D, |#0 ; X| = D, |#1 ; X| = |X|,
  //   |#(l+2) ; u| = D, |#(l+2) ; u ; X| = |#(l+1) ; X|.
  auto jump_from = [&](std::size_t pos, std::uint32_t label) -> Thread {
    while (true) {
      if (pos + 1 >= n) return Thread::dead_end();
      if (label == 0) return Thread::dead_end();
      if (label == 1) return *from[pos + 1];
      if (pos + 2 >= n) return Thread::dead_end();
      ++pos;
      --label;
    }
  };

  for (std::size_t k = n; k-- > 0;) {
    const Instruction& u = seq[k];
    const bool last = k + 1 == n;
    switch (u.kind()) {
      case InstrKind::Halt:
        from[k] = Thread::stop();
        break;
      case InstrKind::Jump:
        from[k] = jump_from(k, u.label());
        break;
      case InstrKind::Plain:
      case InstrKind::PosTest:
      case InstrKind::NegTest: {
        BasicAction action{u.focus(), u.method()};
        if (last) {
          from[k] = Thread::post(std::move(action), Thread::dead_end(),
                                 Thread::dead_end());
        } else if (u.kind() == InstrKind::Plain) {
          from[k] = Thread::post(std::move(action), *from[k + 1], *from[k + 1]);
        } else if (u.kind() == InstrKind::PosTest) {
          from[k] = Thread::post(std::move(action), *from[k + 1], jump_from(k, 2));
        } else {
          from[k] = Thread::post(std::move(action), jump_from(k, 2), *from[k + 1]);
        }
        break;
      }
    }
  }
  return *from[0];
}

Thread use(const Thread& t, const ServiceFamily& u) {
  switch (t.kind()) {
    case Thread::Kind::Stop: return Thread::stop();
    case Thread::Kind::DeadEnd: return Thread::dead_end();
    case Thread::Kind::Post: break;
  }
  const BasicAction& a = t.action();
  const ServiceState* service = u.find(a.focus);
  if (service == nullptr) {
    return Thread::post(a, use(t.then_branch(), u), use(t.else_branch(), u));
  }
  auto [reply, next] = service_step(*service, a.method);
  switch (reply) {
    case Reply::True: return use(t.then_branch(), u.with(a.focus, next));
    case Reply::False: return use(t.else_branch(), u.with(a.focus, next));
    case Reply::Div: break;
  }
  return Thread::dead_end();
}

ServiceFamily apply(const Thread& t, const ServiceFamily& u) {
  switch (t.kind()) {
    case Thread::Kind::Stop: return u;
    case Thread::Kind::DeadEnd: return {};
    case Thread::Kind::Post: break;
  }
  const BasicAction& a = t.action();
  const ServiceState* service = u.find(a.focus);
  if (service == nullptr) return {};
  auto [reply, next] = service_step(*service, a.method);
  switch (reply) {
    case Reply::True: return apply(t.then_branch(), u.with(a.focus, next));
    case Reply::False: return apply(t.else_branch(), u.with(a.focus, next));
    case Reply::Div: break;
  }
  return {};
}

RunResult run_positional(const InstructionSeq& seq, const ServiceFamily& family) {
  ServiceFamily current = family;
  std::size_t pc = 0;
  while (pc < seq.size()) {
    const Instruction& u = seq[pc];
    switch (u.kind()) {
      case InstrKind::Halt:
        return {Termination::Terminated, std::move(current)};
      case InstrKind::Jump:
        if (u.label() == 0) return {Termination::Deadlocked, {}};
        pc += u.label();
        continue;
      default:
        break;
    }
    const Focus focus = u.focus();
    const ServiceState* service = current.find(focus);
    if (service == nullptr) return {Termination::Suspended, {}};
    auto [reply, next] = service_step(*service, u.method());
    if (reply == Reply::Div) return {Termination::Deadlocked, {}};
    current = current.with(focus, next);
    const bool truth = reply == Reply::True;
    if (u.kind() == InstrKind::Plain) {
      pc += 1;
    } else if (u.kind() == InstrKind::PosTest) {
      pc += truth ? 1 : 2;
    } else {
      pc += truth ? 2 : 1;
    }
  }
  // Control left the sequence: no instruction to proceed with.
  return {Termination::Deadlocked, {}};
}

RunResult run_axiomatic(const InstructionSeq& seq, const ServiceFamily& family) {
  const Thread t = thread_extract(seq);
  const Thread residual = use(t, family);
  Termination termination = Termination::Suspended;
  if (residual.is_stop()) termination = Termination::Terminated;
  if (residual.is_dead_end()) termination = Termination::Deadlocked;
  return {termination, apply(t, family)};
}

}  // namespace boolreg
