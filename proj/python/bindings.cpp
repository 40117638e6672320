#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jssp/enumerate.hpp"
#include "jssp/error.hpp"
#include "jssp/exact.hpp"
#include "jssp/experiments.hpp"
#include "jssp/generate.hpp"
#include "jssp/instance.hpp"
#include "jssp/landscape.hpp"
#include "jssp/schedule.hpp"

namespace py = pybind11;
using namespace jssp;

namespace {

using Rows = std::vector<std::vector<int>>;
using Jobs = std::vector<std::vector<std::pair<int, Time>>>;

Instance make_instance(const Jobs& jobs) {
  std::vector<std::vector<Task>> rows;
  for (const auto& job : jobs) {
    auto& row = rows.emplace_back();
    for (const auto& [machine, duration] : job) row.push_back({machine, duration});
  }
  return Instance(std::move(rows));
}

Jobs instance_jobs(const Instance& inst) {
  Jobs out;
  for (const auto& job : inst.jobs()) {
    auto& row = out.emplace_back();
    for (const auto& t : job) row.emplace_back(t.machine, t.duration);
  }
  return out;
}

ExperimentConfig experiment_config(const std::string& combos, int instances, int k, int samples,
                                   const std::optional<std::vector<double>>& rho, std::uint64_t seed, int threads,
                                   std::optional<std::int64_t> node_limit, std::optional<double> time_limit,
                                   bool exact_quality, std::optional<double> max_norm_radius) {
  ExperimentConfig c;
  c.combos = parse_combos(combos);
  c.instances = instances;
  c.k = k;
  c.samples = samples;
  if (rho) c.grid = RhoGrid(*rho);
  c.master_seed = seed;
  c.threads = threads;
  c.node_limit = node_limit;
  c.time_limit_seconds = time_limit;
  c.exact_quality = exact_quality;
  c.max_norm_radius = max_norm_radius;
  c.validate();
  return c;
}

#define EXPERIMENT_ARGS                                                                                        \
  py::arg("combos"), py::arg("instances") = 50, py::arg("k") = 4, py::arg("samples") = 100,                  \
      py::arg("rho") = py::none(), py::arg("seed") = 1, py::arg("threads") = 0, py::arg("node_limit") = py::none(), \
      py::arg("time_limit") = py::none(), py::arg("exact_quality") = false, py::arg("max_norm_radius") = py::none()

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Job shop scheduling landscape analysis";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
  py::register_exception<SizeError>(m, "SizeError", base.ptr());
  py::register_exception<TimeoutError>(m, "TimeoutError", base.ptr());
  py::register_exception<PartialResultError>(m, "PartialResultError", base.ptr());

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("jobs"), "jobs[k] is a list of (machine, duration) pairs")
      .def_property_readonly("n_jobs", &Instance::n_jobs)
      .def_property_readonly("n_machines", &Instance::n_machines)
      .def_property_readonly("edge_count", &Instance::edge_count)
      .def_property_readonly("jobs", &instance_jobs)
      .def("to_text", &format_instance_text)
      .def("to_json", &format_instance_json)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        return "<Instance " + std::to_string(i.n_jobs()) + "x" + std::to_string(i.n_machines()) + ">";
      });

  m.def("parse_instance", &parse_instance, py::arg("text"));
  m.def("load_instance", &load_instance, py::arg("path"));
  m.def(
      "random_instance",
      [](int n, int machines, std::uint64_t seed, Time low, Time high) {
        return random_instance({.n_jobs = n, .n_machines = machines, .duration_low = low, .duration_high = high, .seed = seed});
      },
      py::arg("n_jobs"), py::arg("n_machines"), py::arg("seed"), py::arg("duration_low") = 1,
      py::arg("duration_high") = 100);

  m.def("lower_bound", &lower_bound, py::arg("instance"));
  m.def(
      "makespan", [](const Instance& inst, const Rows& orders) { return makespan_longest_path(inst, MachineOrders(orders)); },
      py::arg("instance"), py::arg("orders"), "Makespan of machine orders (orders[machine] lists jobs)");
  m.def(
      "is_acyclic", [](const Instance& inst, const Rows& orders) { return is_acyclic(inst, MachineOrders(orders)); },
      py::arg("instance"), py::arg("orders"));
  m.def(
      "distance", [](const Rows& a, const Rows& b) { return distance(MachineOrders(a), MachineOrders(b)); }, py::arg("a"),
      py::arg("b"), "Number of disjunctive edges oriented differently");
  m.def(
      "random_schedule",
      [](const Instance& inst, std::uint64_t seed) {
        return build_schedule(inst, random_sequence(inst, seed)).machine_orders().rows();
      },
      py::arg("instance"), py::arg("seed"));
  m.def("brute_force_optimum", [](const Instance& inst) { return brute_force_optimum(inst); }, py::arg("instance"));

  m.def(
      "solve",
      [](const Instance& inst, std::optional<std::int64_t> node_limit, std::optional<double> time_limit) {
        BnbConfig config;
        config.node_limit = node_limit;
        config.time_limit_seconds = time_limit;
        BnbResult r;
        {
          py::gil_scoped_release release;
          r = solve_optimal(inst, config);
        }
        py::dict out;
        out["status"] = to_string(r.status);
        out["proven"] = r.proven;
        out["nodes"] = r.nodes_expanded;
        out["optimum"] = r.witness ? py::cast(r.optimum) : py::none();
        out["witness"] = r.witness ? py::cast(r.witness->rows()) : py::none();
        return out;
      },
      py::arg("instance"), py::arg("node_limit") = py::none(), py::arg("time_limit") = py::none());

  m.def(
      "backbone",
      [](const Instance& inst, const std::vector<double>& rho, std::optional<std::int64_t> node_limit,
         std::optional<double> time_limit) {
        BackboneResult b;
        {
          py::gil_scoped_release release;
          b = rho_backbone(inst, RhoGrid(rho), {.node_limit = node_limit, .time_limit_seconds = time_limit});
        }
        py::dict out;
        out["optimum"] = b.optimum;
        out["rho"] = b.rho;
        out["count"] = b.count;
        out["fraction"] = b.fraction;
        return out;
      },
      py::arg("instance"), py::arg("rho"), py::arg("node_limit") = py::none(), py::arg("time_limit") = py::none());

  m.def(
      "ball_descent",
      [](const Instance& inst, const Rows& start, std::int64_t r) {
        return ball_descent(inst, schedule_from_orders(inst, MachineOrders(start)), r).machine_orders().rows();
      },
      py::arg("instance"), py::arg("start"), py::arg("radius"));
  m.def(
      "rho_distances",
      [](const Instance& inst, int k, const std::vector<double>& rho, std::uint64_t seed) {
        return sample_rho_distances(inst, k, RhoGrid(rho), {.seed = seed});
      },
      py::arg("instance"), py::arg("k"), py::arg("rho"), py::arg("seed") = 1,
      "Pairwise distances between SA first hits, one list per rho");

  m.def(
      "backbone_experiment",
      [](const std::string& combos, int instances, int k, int samples, const std::optional<std::vector<double>>& rho,
         std::uint64_t seed, int threads, std::optional<std::int64_t> node_limit, std::optional<double> time_limit,
         bool exact_quality, std::optional<double> max_norm_radius) {
        const auto c = experiment_config(combos, instances, k, samples, rho, seed, threads, node_limit, time_limit,
                                         exact_quality, max_norm_radius);
        py::gil_scoped_release release;
        return backbone_csv(run_backbone_experiment(c));
      },
      EXPERIMENT_ARGS, "Runs the backbone experiment; returns backbone.csv text");
  m.def(
      "distance_experiment",
      [](const std::string& combos, int instances, int k, int samples, const std::optional<std::vector<double>>& rho,
         std::uint64_t seed, int threads, std::optional<std::int64_t> node_limit, std::optional<double> time_limit,
         bool exact_quality, std::optional<double> max_norm_radius) {
        const auto c = experiment_config(combos, instances, k, samples, rho, seed, threads, node_limit, time_limit,
                                         exact_quality, max_norm_radius);
        py::gil_scoped_release release;
        return distance_csv(run_distance_experiment(c));
      },
      EXPERIMENT_ARGS, "Runs the distance experiment; returns distance.csv text");
  m.def(
      "exactness_experiment",
      [](const std::string& combos, int instances, int k, int samples, const std::optional<std::vector<double>>& rho,
         std::uint64_t seed, int threads, std::optional<std::int64_t> node_limit, std::optional<double> time_limit,
         bool exact_quality, std::optional<double> max_norm_radius) {
        const auto c = experiment_config(combos, instances, k, samples, rho, seed, threads, node_limit, time_limit,
                                         exact_quality, max_norm_radius);
        py::gil_scoped_release release;
        return exactness_csv(run_exactness_experiment(c));
      },
      EXPERIMENT_ARGS, "Runs the exactness experiment; returns exactness.csv text");
  m.def(
      "quality_experiment",
      [](const std::string& combos, int instances, int k, int samples, const std::optional<std::vector<double>>& rho,
         std::uint64_t seed, int threads, std::optional<std::int64_t> node_limit, std::optional<double> time_limit,
         bool exact_quality, std::optional<double> max_norm_radius) {
        const auto c = experiment_config(combos, instances, k, samples, rho, seed, threads, node_limit, time_limit,
                                         exact_quality, max_norm_radius);
        py::gil_scoped_release release;
        const auto r = run_quality_experiment(c);
        return std::make_pair(quality_csv(r), slopes_csv(r));
      },
      EXPERIMENT_ARGS, "Runs the quality experiment; returns (quality.csv, slopes.csv) text");
  m.def(
      "difficulty_experiment",
      [](const std::string& combos, int instances, int k, int samples, const std::optional<std::vector<double>>& rho,
         std::uint64_t seed, int threads, std::optional<std::int64_t> node_limit, std::optional<double> time_limit,
         bool exact_quality, std::optional<double> max_norm_radius) {
        const auto c = experiment_config(combos, instances, k, samples, rho, seed, threads, node_limit, time_limit,
                                         exact_quality, max_norm_radius);
        py::gil_scoped_release release;
        return difficulty_csv(run_difficulty_experiment(c));
      },
      EXPERIMENT_ARGS, "Runs the difficulty experiment; returns difficulty.csv text");
}
