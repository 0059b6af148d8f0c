import { ApiClient } from "./api.js";
import { createApp } from "./app.js";

const base =
  new URLSearchParams(window.location.search).get("api") ??
  window.location.origin.replace(/\/$/, "");
const root = document.getElementById("app");
if (root === null) throw new Error("missing #app mount point");
createApp(root, new ApiClient(base));
