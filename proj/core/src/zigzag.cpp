#include <dodeca/chroma.hpp>

#include <Eigen/Geometry>

#include <algorithm>
#include <deque>
#include <set>

namespace dodeca {

Handedness opposite(Handedness h)
{
    return h == Handedness::LeftRight ? Handedness::RightLeft : Handedness::LeftRight;
}

std::string to_string(Handedness h)
{
    return h == Handedness::LeftRight ? "left-right" : "right-left";
}

VertexId turn(const PolytopeModel& model, VertexId from, VertexId at, bool left)
{
    if (!model.adjacent(from, at))
        throw std::invalid_argument("turn: vertices " + std::to_string(from) + " and " + std::to_string(at) +
                                    " are not adjacent");
    const Vec3& here = model.position(at);
    const Vec3 heading = here - model.position(from);
    // left is the side of heading x outward normal
    const Vec3 left_dir = heading.cross(here);

    VertexId left_exit = -1;
    VertexId right_exit = -1;
    for (VertexId w : model.neighbours(at)) {
        if (w == from)
            continue;
        const double side = (model.position(w) - here).dot(left_dir);
        if (side > kTolerance)
            left_exit = w;
        else if (side < -kTolerance)
            right_exit = w;
    }
    if (left_exit < 0 || right_exit < 0)
        throw ConsistencyError("turn: exits at vertex " + std::to_string(at) + " are not on opposite sides");
    return left ? left_exit : right_exit;
}

std::array<VertexId, 4> zigzag_path(const PolytopeModel& model, VertexId start, VertexId first_step,
                                    Handedness h)
{
    const bool left_first = h == Handedness::LeftRight;
    const VertexId second = turn(model, start, first_step, left_first);
    const VertexId third = turn(model, first_step, second, !left_first);
    return {start, first_step, second, third};
}

std::vector<VertexId> zigzag_trace(const PolytopeModel& model, const Colouring& c, VertexId v, Handedness h)
{
    if (const auto bad = first_violated_face(model, c))
        throw std::invalid_argument("zigzag_trace: colouring is not valid (face " + std::to_string(*bad) + ")");

    std::set<VertexId> checkpoints{v};
    std::deque<VertexId> pending{v};
    while (!pending.empty()) {
        const VertexId u = pending.front();
        pending.pop_front();
        for (VertexId step : model.neighbours(u)) {
            const VertexId reached = zigzag_path(model, u, step, h)[3];
            if (checkpoints.insert(reached).second)
                pending.push_back(reached);
        }
    }
    return {checkpoints.begin(), checkpoints.end()};
}

std::optional<Handedness> working_handedness(const PolytopeModel& model, const Colouring& c)
{
    const auto classes = colour_classes(c);
    std::optional<Handedness> found;
    for (Handedness h : {Handedness::LeftRight, Handedness::RightLeft}) {
        bool works = true;
        for (VertexId v = 0; v < kVertexCount && works; ++v)
            works = zigzag_trace(model, c, v, h) == classes.classes[c[v] - 1];
        if (works) {
            if (found)
                return std::nullopt;
            found = h;
        }
    }
    return found;
}

} // namespace dodeca
