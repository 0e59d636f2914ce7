import init, { diagramInfo, standardizeTableau, fiberBasis } from "./pkg/ferrers_demo.js";

const $ = (id) => document.getElementById(id);

function run(out, f) {
  try {
    return JSON.parse(f());
  } catch (e) {
    out.innerHTML = `<p class="err">${escape(String(e))}</p>`;
    return null;
  }
}

function escape(s) {
  return s.replace(/[&<>]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;" }[c]));
}

// Planar diagrams are drawn as cells; higher dimensions are drawn as
// stacked planar slices along the remaining coordinates.
function draw(info) {
  const cell = 18;
  const pts = info.points;
  const key = (p) => p.join(",");
  const maxSet = new Set(info.maximal_points.map(key));
  const wit = info.witness ? new Set([key(info.witness.a), key(info.witness.b)]) : new Set();
  const slices = new Map();
  for (const p of pts) {
    const rest = p.slice(2).join(",");
    if (!slices.has(rest)) slices.set(rest, []);
    slices.get(rest).push(p);
  }
  let x0 = 0;
  let body = "";
  let height = 0;
  for (const [rest, ps] of slices) {
    const w = Math.max(...ps.map((p) => p[0]));
    const h = Math.max(...ps.map((p) => p[1] ?? 1));
    height = Math.max(height, h);
    for (const p of ps) {
      const cls = wit.has(key(p)) ? "cell wit" : maxSet.has(key(p)) ? "cell max" : "cell";
      body += `<rect class="${cls}" x="${x0 + (p[0] - 1) * cell}" y="${((p[1] ?? 1) - 1) * cell + 16}" width="${cell}" height="${cell}"/>`;
    }
    if (rest) body += `<text x="${x0}" y="12" font-size="11">(${rest})</text>`;
    x0 += (w + 1) * cell;
  }
  return `<svg width="${x0}" height="${height * cell + 20}">${body}</svg>`;
}

function inspect() {
  const out = $("inspect-out");
  const info = run(out, () => diagramInfo($("diagram").value));
  if (!info) { $("picture").innerHTML = ""; return; }
  const verdict = info.standardizable
    ? `<span class="ok">standardizable</span>`
    : `<span class="err">not standardizable</span>: a=(${info.witness.a}), b=(${info.witness.b}), axis ${info.witness.k}, missing (${info.witness.missing})`;
  out.innerHTML = `<p>dimension ${info.dimension}, ${info.size} points, ${info.maximal_points.length} maximal,
    ${info.rectangular ? "rectangular" : "not rectangular"}; ${verdict}</p>`;
  $("picture").innerHTML = draw(info);
}

function standardize() {
  const out = $("standardize-out");
  const res = run(out, () => standardizeTableau($("tableau").value));
  if (!res) return;
  const rows = res.rows.map((r, i) => (res.moved[i] ? "* " : "  ") + r.join(" ")).join("\n");
  out.innerHTML = `<p>input ${res.input_standard ? "was already standard" : "was not standard"}
    (rows marked * changed after sorting)</p><pre>${rows}</pre>`;
}

function fiber() {
  const out = $("fiber-out");
  const r = Number($("copies").value);
  out.innerHTML = "<p>computing…</p>";
  // Yield so the message paints before the synchronous computation.
  setTimeout(() => {
    const res = run(out, () => fiberBasis($("diagram").value, r));
    if (!res) return;
    const v = res.verification;
    const check = v.skipped
      ? `kernel comparison skipped (${escape(v.skipped)})`
      : `kernel comparison up to degree ${v.max_degree}: ${v.sound && v.gb_closed && v.complete_at_degree ? '<span class="ok">passed</span>' : '<span class="err">failed</span>'}`;
    out.innerHTML = `<p>${res.variables} variables, ${res.candidate_size} interchange binomials,
      ${res.reduced.length} after reduction; Gröbner basis:
      ${res.is_groebner ? '<span class="ok">yes</span>' : '<span class="err">no</span>'};
      squarefree initial terms: ${res.initial_squarefree}; ${check}</p>
      <pre>${escape(res.reduced.join("\n"))}</pre>`;
  }, 10);
}

await init();
$("inspect").onclick = inspect;
$("standardize").onclick = standardize;
$("fiber").onclick = fiber;
inspect();
