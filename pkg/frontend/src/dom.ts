/** Small DOM helpers; no framework, just template strings and wiring. */

export function esc(text: string | number | null | undefined): string {
  if (text === null || text === undefined) return "";
  return String(text)
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function qs<T extends Element>(root: ParentNode, selector: string): T {
  const node = root.querySelector(selector);
  if (!node) throw new Error(`missing element ${selector}`);
  return node as T;
}

export function qsa<T extends Element>(root: ParentNode, selector: string): T[] {
  return Array.from(root.querySelectorAll(selector)) as T[];
}

export function on(
  root: ParentNode,
  selector: string,
  event: string,
  handler: (ev: Event, target: Element) => void,
): void {
  for (const node of qsa(root, selector)) {
    node.addEventListener(event, (ev) => handler(ev, node));
  }
}

/** Render the error envelope's field map under matching inputs. */
export function showFieldErrors(root: ParentNode, fields: Record<string, string>): void {
  for (const [field, message] of Object.entries(fields)) {
    const slot = root.querySelector(`[data-error-for="${field}"]`);
    if (slot) slot.textContent = message;
  }
}

export function clearFieldErrors(root: ParentNode): void {
  for (const slot of qsa(root, "[data-error-for]")) slot.textContent = "";
}

export function banner(kind: "error" | "info" | "ok", text: string): string {
  return `<div class="banner ${kind}">${esc(text)}</div>`;
}

export function downloadText(filename: string, text: string, mime = "text/csv"): void {
  const blob = new Blob([text], { type: mime });
  const url = URL.createObjectURL(blob);
  const link = document.createElement("a");
  link.href = url;
  link.download = filename;
  link.click();
  URL.revokeObjectURL(url);
}
