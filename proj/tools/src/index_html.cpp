#include "hot/cli/service.hpp"

namespace hot::cli {

// Fallback page for `serve` without --ui-dir. Hash routes: #node/<id>, #edge/<id>.
std::string_view builtin_index_html() {
  static constexpr std::string_view kPage = R"html(<!doctype html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>HoT browser</title>
<style>
body { font-family: sans-serif; max-width: 60rem; margin: 1rem auto; padding: 0 1rem; }
#trail a { margin-right: .5rem; }
pre { white-space: pre-wrap; }
li { margin: .2rem 0; }
</style>
</head>
<body>
<h1 id="meta">HoT browser</h1>
<form id="search"><input id="q" placeholder="search nodes and hyperedges" size="40"> <button>Search</button></form>
<div id="trail"></div>
<main id="view"></main>
<script>
const api = (p) => fetch(p).then((r) => r.json().then((b) => ({ ok: r.ok, body: b })));
const esc = (s) => String(s).replace(/[&<>"]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;" })[c]);
const link = (kind, id, text) => `<a href="#${kind}/${encodeURIComponent(id)}">${esc(text || id)}</a>`;
const trail = [];
function remember(kind, id) {
  const key = kind + "/" + id;
  if (trail[trail.length - 1] !== key) trail.push(key);
  document.getElementById("trail").innerHTML = trail
    .map((k) => { const [t, ...rest] = k.split("/"); return link(t, decodeURIComponent(rest.join("/")), rest.join("/")); })
    .join(" &rarr; ");
}
async function show() {
  const view = document.getElementById("view");
  const [kind, ...rest] = location.hash.slice(1).split("/");
  const id = decodeURIComponent(rest.join("/"));
  if (kind === "node") {
    const { ok, body } = await api("/api/nodes/" + encodeURIComponent(id));
    if (!ok) { view.textContent = body.error; return; }
    remember("node", id);
    view.innerHTML = `<h2>${esc(body.title || body.id)}</h2><pre>${esc(body.text)}</pre><h3>Hyperedges</h3><ul>` +
      body.hyperedges.map((e) => `<li>${link("edge", e.id, e.label)} (${e.size})</li>`).join("") + "</ul>";
  } else if (kind === "edge") {
    const { ok, body } = await api("/api/hyperedges/" + encodeURIComponent(id));
    if (!ok) { view.textContent = body.error; return; }
    remember("edge", id);
    view.innerHTML = `<h2>${esc(body.label)}</h2><ul>` +
      body.members.map((m) => `<li>${link("node", m.id, m.title || m.id)}<br><small>${esc(m.snippet)}</small></li>`).join("") + "</ul>";
  }
}
document.getElementById("search").addEventListener("submit", async (ev) => {
  ev.preventDefault();
  const q = document.getElementById("q").value;
  const { body } = await api("/api/search?q=" + encodeURIComponent(q));
  document.getElementById("view").innerHTML = "<h3>Nodes</h3><ul>" +
    body.nodes.map((n) => `<li>${link("node", n.id, n.title || n.id)}</li>`).join("") + "</ul><h3>Hyperedges</h3><ul>" +
    body.hyperedges.map((e) => `<li>${link("edge", e.id, e.label)} (${e.size})</li>`).join("") + "</ul>";
});
window.addEventListener("hashchange", show);
api("/api/meta").then(({ body }) => {
  document.getElementById("meta").textContent = `${body.label}: ${body.node_count} nodes, ${body.edge_count} hyperedges`;
});
show();
</script>
</body>
</html>
)html";
  return kPage;
}

}  // namespace hot::cli
