from pydrs.render.boxes import BoxRenderer, render_boxes, render_form

__all__ = ['BoxRenderer', 'render_boxes', 'render_form']
