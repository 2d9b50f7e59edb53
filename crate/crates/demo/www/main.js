import init, { bound_row, weighted_bound, l_value, null_vector_summary, origin_curve, PlanarDemo } from "./pkg/cpbounds_demo.js";

const $ = (id) => document.getElementById(id);
const fmt = (x, n = 6) => (Number.isFinite(x) ? x.toFixed(n) : "-");

function bind(id, onChange) {
  const input = $(id);
  const out = $(id + "-out");
  const update = () => {
    if (out) out.textContent = input.value;
    onChange();
  };
  input.addEventListener("input", update);
  return () => parseFloat(input.value);
}

// bounds

let gammaD = NaN;

function refreshBounds() {
  const d = parseInt($("b-d").value, 10);
  $("b-d-out").textContent = d;
  const row = bound_row(d);
  gammaD = row[0];
  $("b-row").innerHTML = Array.from(row, (v) => `<td>${fmt(v)}</td>`).join("");
  refreshWeights();
}

function refreshWeights() {
  const d = parseInt($("b-d").value, 10);
  const a = parseFloat($("b-a").value);
  const b = parseFloat($("b-b").value);
  $("b-a-out").textContent = a.toFixed(3);
  $("b-b-out").textContent = b.toFixed(3);
  const l = l_value(a, b, gammaD);
  const w = weighted_bound(d, a, b, gammaD);
  $("b-l").textContent = fmt(l);
  $("b-w").textContent = w === undefined ? "none (L <= 0)" : fmt(w);
  $("b-w").className = w === undefined ? "bad" : "";
}

// planar simulation

const SIDE = 128;
let demo = null;
let running = true;
const planar = {
  lambda: bind("p-lambda", resetPlanar),
  a: bind("p-a", resetPlanar),
  b: bind("p-b", resetPlanar),
};

function resetPlanar() {
  if (demo) demo.free();
  demo = new PlanarDemo(SIDE, planar.lambda(), planar.a(), planar.b(), (Math.random() * 2 ** 32) >>> 0);
  draw();
}

function paint(canvas, colorAt) {
  const ctx = canvas.getContext("2d");
  const img = ctx.createImageData(SIDE, SIDE);
  for (let i = 0; i < SIDE * SIDE; i++) {
    const [r, g, b] = colorAt(i);
    img.data[4 * i] = r;
    img.data[4 * i + 1] = g;
    img.data[4 * i + 2] = b;
    img.data[4 * i + 3] = 255;
  }
  ctx.putImageData(img, 0, 0);
}

function draw() {
  const occ = demo.occupied();
  const logs = demo.log_xi();
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of logs) {
    if (Number.isFinite(v)) {
      lo = Math.min(lo, v);
      hi = Math.max(hi, v);
    }
  }
  const span = hi > lo ? hi - lo : 1;
  paint($("p-eta"), (i) => (occ[i] ? [200, 40, 40] : [245, 245, 245]));
  paint($("p-xi"), (i) => {
    if (!Number.isFinite(logs[i])) return [245, 245, 245];
    const s = (logs[i] - lo) / span;
    return [Math.round(20 + 200 * s), Math.round(30 + 120 * s), Math.round(90 + 60 * (1 - s))];
  });
  $("p-t").textContent = demo.time().toFixed(2);
  $("p-density").textContent = demo.density().toFixed(4);
  $("p-mean").textContent = demo.mean_xi().toPrecision(5);
  const ok = demo.coupling_holds();
  $("p-coupled").textContent = ok ? "exact" : "BROKEN";
  $("p-coupled").className = ok ? "" : "bad";
}

function frame() {
  if (running && demo) {
    try {
      demo.advance(0.05);
    } catch (e) {
      running = false;
      $("p-run").textContent = "Run";
      $("p-coupled").textContent = String(e);
    }
    draw();
  }
  requestAnimationFrame(frame);
}

// moment ODE

function refreshMoments() {
  const lambda = parseFloat($("m-lambda").value);
  $("m-lambda-out").textContent = lambda.toFixed(3);
  const w = 1 / (2 - bound_row(3)[0]);
  const canvas = $("m-plot");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  let summary = null;
  try {
    summary = null_vector_summary(3, lambda, w, w, 6);
  } catch (e) {
    $("m-summary").textContent = String(e);
    $("m-summary").className = "bad";
  }
  if (summary) {
    const [c, ceiling, floor, threshold, residual] = summary;
    $("m-summary").className = "";
    $("m-summary").textContent =
      `threshold ${fmt(threshold)}, c = ${fmt(c)}, ceiling K(O)/inf K = ${fmt(ceiling, 3)}, ` +
      `survival floor ${fmt(floor)}, residual ${residual.toExponential(2)}`;
  }
  let curve;
  try {
    curve = origin_curve(3, lambda, w, w, 6, 5, 100);
  } catch (e) {
    return;
  }
  const top = Math.max(summary ? summary[1] : 0, ...curve.filter((_, i) => i % 2 === 1)) * 1.05;
  const x = (t) => 40 + (t / 5) * (canvas.width - 50);
  const y = (f) => canvas.height - 20 - (f / top) * (canvas.height - 30);
  ctx.strokeStyle = "#888";
  ctx.strokeRect(40, 10, canvas.width - 50, canvas.height - 30);
  ctx.fillStyle = "#444";
  ctx.fillText(top.toFixed(2), 2, 16);
  ctx.fillText("0", 28, canvas.height - 20);
  ctx.fillText("t = 5", canvas.width - 40, canvas.height - 5);
  if (summary) {
    ctx.strokeStyle = "#c33";
    ctx.beginPath();
    ctx.moveTo(x(0), y(summary[1]));
    ctx.lineTo(x(5), y(summary[1]));
    ctx.stroke();
  }
  ctx.strokeStyle = "#236";
  ctx.beginPath();
  ctx.moveTo(x(0), y(1));
  for (let i = 0; i < curve.length; i += 2) ctx.lineTo(x(curve[i]), y(curve[i + 1]));
  ctx.stroke();
}

await init();
$("b-d").addEventListener("input", refreshBounds);
$("b-a").addEventListener("input", refreshWeights);
$("b-b").addEventListener("input", refreshWeights);
$("m-lambda").addEventListener("input", refreshMoments);
$("p-run").addEventListener("click", () => {
  running = !running;
  $("p-run").textContent = running ? "Pause" : "Run";
});
$("p-reset").addEventListener("click", resetPlanar);
for (const id of ["p-lambda", "p-a", "p-b"]) $(id + "-out").textContent = $(id).value;
refreshBounds();
resetPlanar();
refreshMoments();
requestAnimationFrame(frame);
